#include "pmod/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "pmod/errors.hpp"
#include "pmod/stabilizer_chain.hpp"

namespace pmod {

struct PermGroup::Cache {
  std::once_flag chain_once;
  std::unique_ptr<StabilizerChain> chain;

  std::once_flag elements_once;
  std::vector<Permutation> elements;
  std::unordered_set<Permutation, PermutationHash> index;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, Limits limits)
    : degree_(degree),
      generators_(std::move(generators)),
      limits_(limits),
      cache_(std::make_shared<Cache>()) {
  if (degree > limits_.max_degree)
    throw ResourceLimit("degree " + std::to_string(degree) + " exceeds bound " +
                        std::to_string(limits_.max_degree));
  for (const auto& g : generators_)
    if (g.degree() != degree) throw InvalidArgument("generator degree does not match group degree");
}

PermGroup PermGroup::trivial(std::size_t degree, Limits limits) { return PermGroup(degree, {}, limits); }

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elements, Limits limits) {
  if (elements.size() > limits.max_order) throw ResourceLimit("element list exceeds enumeration bound");
  std::unordered_set<Permutation, PermutationHash> all(elements.begin(), elements.end());
  if (!all.contains(Permutation::identity(degree))) throw InvalidArgument("element list lacks identity");

  // Greedy generating set: take the first element outside the closure so far.
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> span{Permutation::identity(degree)};
  std::vector<Permutation> span_list{Permutation::identity(degree)};
  for (const auto& e : elements) {
    if (e.degree() != degree) throw InvalidArgument("element degree mismatch");
    if (span.contains(e)) continue;
    gens.push_back(e);
    for (std::size_t i = 0; i < span_list.size(); ++i) {
      for (const auto& g : gens) {
        Permutation h = span_list[i] * g;
        if (!all.contains(h)) throw InvalidArgument("element list is not closed under composition");
        if (span.insert(h).second) span_list.push_back(std::move(h));
      }
    }
  }
  if (span.size() != all.size()) throw InvalidArgument("element list is not a group");

  PermGroup group(degree, std::move(gens), limits);
  std::call_once(group.cache_->elements_once, [&] {
    group.cache_->elements = std::move(span_list);
    group.cache_->index = std::move(span);
  });
  return group;
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cache_->chain_once,
                 [&] { cache_->chain = std::make_unique<StabilizerChain>(degree_, generators_); });
  return *cache_->chain;
}

const std::vector<Permutation>& PermGroup::elements() const {
  std::call_once(cache_->elements_once, [&] {
    if (limits_.use_chain && chain().order() > limits_.max_order)
      throw ResourceLimit("group order " + chain().order().str() + " exceeds enumeration bound " +
                          std::to_string(limits_.max_order));
    std::vector<Permutation> list{Permutation::identity(degree_)};
    std::unordered_set<Permutation, PermutationHash> index{list.front()};
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (const auto& g : generators_) {
        Permutation h = list[i] * g;
        if (index.contains(h)) continue;
        if (list.size() >= limits_.max_order)
          throw ResourceLimit("closure enumeration exceeded bound " + std::to_string(limits_.max_order));
        index.insert(h);
        list.push_back(std::move(h));
      }
    }
    if (limits_.use_chain && BigInt(list.size()) != chain().order())
      throw std::logic_error("closure enumeration and stabilizer chain disagree on group order");
    cache_->elements = std::move(list);
    cache_->index = std::move(index);
  });
  return cache_->elements;
}

BigInt PermGroup::order() const {
  if (limits_.use_chain) {
    BigInt n = chain().order();
    if (n <= limits_.max_order) elements();  // cross-check by enumeration
    return n;
  }
  return BigInt(elements().size());
}

std::uint64_t PermGroup::order_u64() const {
  BigInt n = order();
  if (n > std::numeric_limits<std::uint64_t>::max()) throw ResourceLimit("group order exceeds 64 bits");
  return n.convert_to<std::uint64_t>();
}

bool PermGroup::is_enumerable() const {
  if (limits_.use_chain) return chain().order() <= limits_.max_order;
  try {
    elements();
    return true;
  } catch (const ResourceLimit&) {
    return false;
  }
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  if (is_enumerable()) {
    elements();
    return cache_->index.contains(g);
  }
  return chain().contains(g);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree() != degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

BigInt group_order(const PermGroup& g) { return g.order(); }

std::vector<std::vector<Point>> orbits(std::span<const Permutation> gens, std::size_t degree) {
  std::vector<int> orbit_of(degree, -1);
  std::vector<std::vector<Point>> result;
  for (Point start = 0; start < degree; ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(result.size());
    std::vector<Point> orbit{start};
    orbit_of[start] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& g : gens) {
        const Point y = g[orbit[k]];
        if (orbit_of[y] < 0) {
          orbit_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) { return orbits(g.generators(), g.degree()); }

PermGroup generate(std::size_t degree, std::vector<Permutation> gens, Limits limits) {
  return PermGroup(degree, std::move(gens), limits);
}

PermGroup normalizer(const PermGroup& group, const PermGroup& sub) {
  if (!sub.is_subgroup_of(group)) throw InvalidArgument("normalizer: H is not a subgroup of G");
  sub.elements();
  std::vector<Permutation> keep;
  for (const auto& g : group.elements()) {
    bool normalizes = std::all_of(sub.generators().begin(), sub.generators().end(),
                                  [&](const Permutation& h) { return sub.contains(h.conjugate_by(g)); });
    if (normalizes) keep.push_back(g);
  }
  return PermGroup::from_elements(group.degree(), std::move(keep), group.limits());
}

PermGroup centralizer(const PermGroup& group, const Permutation& g) {
  std::vector<Permutation> keep;
  for (const auto& h : group.elements())
    if (h * g == g * h) keep.push_back(h);
  return PermGroup::from_elements(group.degree(), std::move(keep), group.limits());
}

PermGroup point_stabilizer(const PermGroup& group, Point x) {
  if (x >= group.degree()) throw InvalidArgument("point outside domain");
  std::vector<Permutation> keep;
  for (const auto& h : group.elements())
    if (h[x] == x) keep.push_back(h);
  return PermGroup::from_elements(group.degree(), std::move(keep), group.limits());
}

bool is_transitive(const PermGroup& g) { return g.degree() <= 1 || orbits(g).size() == 1; }

namespace {

// Union-find closure of the seed pair {0, beta}: the finest block system in
// which 0 and beta share a block (Atkinson).
std::vector<Point> minimal_block_classes(const PermGroup& g, Point beta) {
  const std::size_t n = g.degree();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<Point, Point>> queue;
  auto unite = [&](Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    queue.emplace_back(a, b);
  };
  unite(0, beta);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    auto [a, b] = queue[k];
    for (const auto& gen : g.generators()) unite(gen[a], gen[b]);
  }
  std::vector<Point> cls(n);
  for (Point x = 0; x < n; ++x) cls[x] = find(x);
  return cls;
}

}  // namespace

std::optional<BlockSystem> primitivity_blocks(const PermGroup& g) {
  if (!is_transitive(g)) throw InvalidArgument("block test requires a transitive group");
  const std::size_t n = g.degree();
  for (Point beta = 1; beta < n; ++beta) {
    std::vector<Point> cls = minimal_block_classes(g, beta);
    std::vector<std::vector<Point>> blocks;
    std::vector<int> slot(n, -1);
    for (Point x = 0; x < n; ++x) {
      if (slot[cls[x]] < 0) {
        slot[cls[x]] = static_cast<int>(blocks.size());
        blocks.emplace_back();
      }
      blocks[static_cast<std::size_t>(slot[cls[x]])].push_back(x);
    }
    if (blocks.size() > 1) return blocks;
  }
  return std::nullopt;
}

bool is_primitive(const PermGroup& g) { return is_transitive(g) && !primitivity_blocks(g).has_value(); }

PermGroup product_action(const PermGroup& first, const PermGroup& second) {
  const std::size_t n1 = first.degree(), n2 = second.degree();
  const std::size_t n = n1 * n2;
  Limits limits = first.limits();
  if (n > limits.max_degree)
    throw ResourceLimit("product degree " + std::to_string(n) + " exceeds bound " +
                        std::to_string(limits.max_degree));
  std::vector<Permutation> gens;
  for (const auto& g : first.generators()) {
    std::vector<Point> img(n);
    for (Point a = 0; a < n1; ++a)
      for (Point b = 0; b < n2; ++b) img[a * n2 + b] = static_cast<Point>(g[a] * n2 + b);
    gens.emplace_back(std::move(img));
  }
  for (const auto& g : second.generators()) {
    std::vector<Point> img(n);
    for (Point a = 0; a < n1; ++a)
      for (Point b = 0; b < n2; ++b) img[a * n2 + b] = static_cast<Point>(a * n2 + g[b]);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens), limits);
}

}  // namespace pmod
