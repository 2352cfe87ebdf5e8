#include "pmod/stabilizer_chain.hpp"

#include "pmod/errors.hpp"

namespace pmod {

namespace {

Point first_moved_point(const Permutation& g) {
  for (Point x = 0; x < g.degree(); ++x)
    if (g[x] != x) return x;
  return static_cast<Point>(g.degree());
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree) {
  std::vector<Permutation> nontrivial;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidArgument("generator degree mismatch");
    if (!g.is_identity()) nontrivial.push_back(g);
  }

  for (const auto& g : nontrivial) {
    bool fixes_base = true;
    for (Point b : base_) fixes_base = fixes_base && g[b] == b;
    if (fixes_base) add_base_point(first_moved_point(g));
  }
  for (const auto& g : nontrivial) {
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      levels_[l].generators.push_back(g);
      if (g[base_[l]] != base_[l]) break;
    }
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_orbit(l);

  // Schreier-Sims, working from the deepest level upwards; whenever a
  // Schreier generator fails to sift, the residue is added to the levels it
  // belongs to and processing resumes at the level where sifting stopped.
  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t lvl = i - 1;
    bool restarted = false;
    for (std::size_t k = 0; k < levels_[lvl].orbit.size() && !restarted; ++k) {
      for (std::size_t s = 0; s < levels_[lvl].generators.size(); ++s) {
        const Point beta = levels_[lvl].orbit[k];
        const Permutation gen = levels_[lvl].generators[s];
        const Point image = gen[beta];
        Permutation schreier = transversal(lvl, beta) * gen * transversal(lvl, image).inverse();
        if (schreier.is_identity()) continue;
        auto [residue, stopped] = strip(std::move(schreier), lvl + 1);
        if (stopped == levels_.size() && residue.is_identity()) continue;
        if (stopped == levels_.size()) add_base_point(first_moved_point(residue));
        for (std::size_t l = lvl + 1; l <= stopped; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(l);
        }
        i = stopped + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

void StabilizerChain::add_base_point(Point b) {
  base_.push_back(b);
  levels_.emplace_back();
  rebuild_orbit(levels_.size() - 1);
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  Level& L = levels_[level];
  const Point b = base_[level];
  L.orbit.assign(1, b);
  L.slot.assign(degree_, -1);
  L.transversals.assign(1, Permutation::identity(degree_));
  L.slot[b] = 0;
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    for (const auto& gen : L.generators) {
      const Point y = gen[L.orbit[k]];
      if (L.slot[y] >= 0) continue;
      L.slot[y] = static_cast<int>(L.orbit.size());
      L.orbit.push_back(y);
      L.transversals.push_back(L.transversals[k] * gen);
    }
  }
}

const Permutation& StabilizerChain::transversal(std::size_t level, Point image) const {
  const int s = levels_[level].slot[image];
  if (s < 0) throw InvalidArgument("point outside basic orbit");
  return levels_[level].transversals[static_cast<std::size_t>(s)];
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Point y = g[base_[l]];
    const int s = levels_[l].slot[y];
    if (s < 0) return {std::move(g), l};
    g = g * levels_[l].transversals[static_cast<std::size_t>(s)].inverse();
  }
  return {std::move(g), levels_.size()};
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const auto& L : levels_) result *= L.orbit.size();
  return result;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, stopped] = strip(g, 0);
  return stopped == levels_.size() && residue.is_identity();
}

}  // namespace pmod
