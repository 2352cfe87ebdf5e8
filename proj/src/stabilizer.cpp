#include "pmod/stabilizer.hpp"

#include <array>
#include <limits>

#include "pmod/errors.hpp"
#include "pmod/stabilizer_chain.hpp"
#include "pmod/sylow.hpp"

namespace pmod {

PermGroup setwise_stabilizer(const PermGroup& g, const PointSet& delta) {
  if (delta.degree() != g.degree()) throw InvalidArgument("subset degree does not match group degree");
  if (!g.is_enumerable()) return setwise_stabilizer_backtrack(g, delta);
  std::vector<Permutation> keep;
  for (const auto& x : g.elements())
    if (delta.is_stabilized_by(x)) keep.push_back(x);
  return PermGroup::from_elements(g.degree(), std::move(keep), g.limits());
}

namespace {

struct Backtrack {
  const StabilizerChain& chain;
  const PointSet& delta;
  std::uint64_t limit;
  std::vector<Permutation> found;

  // prefix = u_{level-1} * ... * u_0
  void search(std::size_t level, const Permutation& prefix) {
    if (level == chain.levels()) {
      if (delta.is_stabilized_by(prefix)) {
        if (found.size() >= limit) throw ResourceLimit("setwise stabilizer exceeds enumeration bound");
        found.push_back(prefix);
      }
      return;
    }
    const bool inside = delta.contains(chain.base()[level]);
    for (Point gamma : chain.orbit(level)) {
      if (delta.contains(prefix[gamma]) != inside) continue;
      search(level + 1, chain.transversal(level, gamma) * prefix);
    }
  }
};

}  // namespace

PermGroup setwise_stabilizer_backtrack(const PermGroup& g, const PointSet& delta) {
  if (delta.degree() != g.degree()) throw InvalidArgument("subset degree does not match group degree");
  Backtrack bt{g.chain(), delta, g.limits().max_order, {}};
  bt.search(0, Permutation::identity(g.degree()));
  return PermGroup::from_elements(g.degree(), std::move(bt.found), g.limits());
}

std::uint64_t stab_p_part(const PermGroup& g, const PointSet& delta, std::uint64_t p) {
  return p_part(setwise_stabilizer(g, delta).order_u64(), p);
}

std::uint64_t image_mask(const Permutation& g, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (Point x = 0; mask != 0; ++x, mask >>= 1u)
    if (mask & 1u) out |= std::uint64_t{1} << g[x];
  return out;
}

SubsetCensus::SubsetCensus(const PermGroup& g, std::size_t max_degree)
    : degree_(g.degree()), group_order_(g.order()) {
  if (degree_ > max_degree || degree_ > 30)
    throw ResourceLimit("subset census limited to degree " + std::to_string(max_degree));

  // Per generator, per byte of the mask: image of that byte's points.
  const std::size_t chunks = (degree_ + 7) / 8;
  std::vector<std::vector<std::array<std::uint32_t, 256>>> tables;
  for (const auto& gen : g.generators()) {
    std::vector<std::array<std::uint32_t, 256>> t(chunks);
    for (std::size_t c = 0; c < chunks; ++c)
      for (std::uint32_t byte = 0; byte < 256; ++byte) {
        const std::uint64_t m = static_cast<std::uint64_t>(byte) << (8 * c);
        t[c][byte] = (m >> degree_) ? 0 : static_cast<std::uint32_t>(image_mask(gen, m));
      }
    tables.push_back(std::move(t));
  }
  auto apply = [&](const auto& t, std::uint32_t mask) {
    std::uint32_t out = 0;
    for (std::size_t c = 0; c < t.size(); ++c) out |= t[c][(mask >> (8 * c)) & 0xffu];
    return out;
  };

  constexpr std::uint32_t kPending = std::numeric_limits<std::uint32_t>::max();
  const std::uint64_t total = subset_count();
  orbit_size_.assign(total, 0);
  std::vector<std::uint32_t> orbit;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (orbit_size_[start] != 0) continue;
    orbit.assign(1, static_cast<std::uint32_t>(start));
    orbit_size_[start] = kPending;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& t : tables) {
        const std::uint32_t y = apply(t, orbit[k]);
        if (orbit_size_[y] == 0) {
          orbit_size_[y] = kPending;
          orbit.push_back(y);
        }
      }
    for (std::uint32_t m : orbit) orbit_size_[m] = static_cast<std::uint32_t>(orbit.size());
    ++orbit_count_;
  }
}

namespace {

std::uint64_t small_p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

}  // namespace

std::uint64_t SubsetCensus::stab_p_part(std::uint64_t mask, std::uint64_t p) const {
  const auto full = p_part(group_order_, p).convert_to<std::uint64_t>();
  return full / small_p_part(orbit_size_.at(mask), p);
}

std::map<std::uint64_t, std::uint64_t> SubsetCensus::p_part_histogram(std::uint64_t p) const {
  const auto full = p_part(group_order_, p).convert_to<std::uint64_t>();
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::uint64_t power = 1; power <= full; power *= p) hist[power] = 0;
  for (std::uint64_t mask = 0; mask < subset_count(); ++mask)
    ++hist[full / small_p_part(orbit_size_[mask], p)];
  return hist;
}

}  // namespace pmod
