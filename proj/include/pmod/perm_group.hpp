#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pmod/permutation.hpp"

namespace pmod {

using BigInt = boost::multiprecision::cpp_int;

/// Resource bounds shared by every group computation.
struct Limits {
  /// Full element lists are only materialized up to this order.
  std::uint64_t max_order = 1'000'000;
  /// When false the order is obtained by closure enumeration alone, and a
  /// group above `max_order` raises ResourceLimit instead.
  bool use_chain = true;
  std::size_t max_degree = 4096;
};

class StabilizerChain;

/// A permutation group on {0..n-1} given by generators.
///
/// Immutable after construction. The stabilizer chain and the element list
/// are computed lazily, once, and shared between copies, so a PermGroup can
/// be read concurrently from several threads.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators, Limits limits = {});

  static PermGroup trivial(std::size_t degree, Limits limits = {});

  /// Builds a group from a complete, closed element list (identity included).
  /// A small generating set is chosen greedily in list order and the list is
  /// kept as the element cache. Closure is checked.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements,
                                 Limits limits = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const Limits& limits() const noexcept { return limits_; }

  /// Exact order. Enumerable groups are counted by closure enumeration and
  /// cross-checked against the stabilizer chain when it is enabled.
  BigInt order() const;
  std::uint64_t order_u64() const;

  bool is_enumerable() const;

  /// All elements, identity first, in breadth-first order over the
  /// generators (deterministic). Throws ResourceLimit above max_order.
  const std::vector<Permutation>& elements() const;

  bool contains(const Permutation& g) const;
  bool is_subgroup_of(const PermGroup& other) const;

  const StabilizerChain& chain() const;

 private:
  struct Cache;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  Limits limits_;
  std::shared_ptr<Cache> cache_;
};

BigInt group_order(const PermGroup& g);

/// Orbit partition of <gens> on {0..n-1}; each orbit sorted, orbits ordered
/// by least element.
std::vector<std::vector<Point>> orbits(std::span<const Permutation> gens, std::size_t degree);
std::vector<std::vector<Point>> orbits(const PermGroup& g);

/// Subgroup generated by `gens` inside the symmetric group of `degree`.
PermGroup generate(std::size_t degree, std::vector<Permutation> gens, Limits limits = {});

/// {g in G : g^-1 H g = H}. Throws InvalidArgument unless H <= G.
PermGroup normalizer(const PermGroup& group, const PermGroup& sub);

/// {h in G : hg = gh}.
PermGroup centralizer(const PermGroup& group, const Permutation& g);

PermGroup point_stabilizer(const PermGroup& group, Point x);

bool is_transitive(const PermGroup& g);

using BlockSystem = std::vector<std::vector<Point>>;

/// nullopt means primitive. Otherwise the block system generated by the
/// first seed pair {0, b} (smallest b) whose minimal block is proper;
/// blocks sorted, ordered by least element. Throws InvalidArgument for an
/// intransitive group.
std::optional<BlockSystem> primitivity_blocks(const PermGroup& g);
bool is_primitive(const PermGroup& g);

/// Direct product acting on pairs; (a, b) is point a * n2 + b.
PermGroup product_action(const PermGroup& first, const PermGroup& second);

}  // namespace pmod
