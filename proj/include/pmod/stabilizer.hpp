#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pmod/perm_group.hpp"
#include "pmod/point_set.hpp"

namespace pmod {

/// Stab_G(delta). Filters the element list when G is enumerable, otherwise
/// falls back to the backtrack search.
PermGroup setwise_stabilizer(const PermGroup& g, const PointSet& delta);

/// Stab_G(delta) by depth-first search over the stabilizer chain: base
/// images are chosen level by level and a branch is cut as soon as a base
/// point inside delta would leave it (or one outside would enter it).
/// Works without the full element list; the stabilizer itself must still
/// fit under the enumeration bound.
PermGroup setwise_stabilizer_backtrack(const PermGroup& g, const PointSet& delta);

std::uint64_t stab_p_part(const PermGroup& g, const PointSet& delta, std::uint64_t p);

/// Orbits of G on all 2^n subsets of a domain of size n <= max_degree.
/// Stabilizer orders follow from orbit-stabilizer: |Stab(D)| = |G| / |D^G|.
/// Subsets are indexed by their bit mask.
class SubsetCensus {
 public:
  static constexpr std::size_t kMaxDegree = 22;

  SubsetCensus(const PermGroup& g, std::size_t max_degree = kMaxDegree);

  std::size_t degree() const noexcept { return degree_; }
  std::uint64_t subset_count() const noexcept { return std::uint64_t{1} << degree_; }
  std::uint32_t orbit_size(std::uint64_t mask) const { return orbit_size_[mask]; }
  std::size_t orbit_count() const noexcept { return orbit_count_; }

  /// p-part of |Stab_G(mask)|.
  std::uint64_t stab_p_part(std::uint64_t mask, std::uint64_t p) const;

  /// Subset count per stabilizer p-part; every power of p up to |G|_p is
  /// present, possibly with count zero.
  std::map<std::uint64_t, std::uint64_t> p_part_histogram(std::uint64_t p) const;

 private:
  std::size_t degree_;
  BigInt group_order_;
  std::vector<std::uint32_t> orbit_size_;
  std::size_t orbit_count_ = 0;
};

/// Image of a subset mask under a permutation of degree <= 64.
std::uint64_t image_mask(const Permutation& g, std::uint64_t mask);

}  // namespace pmod
