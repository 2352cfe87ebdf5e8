#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pmod/permutation.hpp"

namespace pmod {

/// A subset of {0, ..., n-1}. Bit i is point i, so for degree <= 64 the
/// subset corresponds to the integer mask sum(2^i); "numeric order" on
/// subsets means order on that integer.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t degree) : bits_(degree) {}
  PointSet(std::size_t degree, std::initializer_list<Point> points);

  static PointSet from_points(std::size_t degree, std::span<const Point> points);
  static PointSet from_mask(std::size_t degree, std::uint64_t mask);
  static PointSet full(std::size_t degree);

  std::size_t degree() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool contains(Point x) const { return x < bits_.size() && bits_.test(x); }

  void insert(Point x);
  void erase(Point x);

  /// Members in increasing order.
  std::vector<Point> points() const;

  /// {x^g : x in this}.
  PointSet image(const Permutation& g) const;
  bool is_stabilized_by(const Permutation& g) const;

  /// Only valid for degree <= 64.
  std::uint64_t to_mask() const;

  /// "{0,4}" style rendering.
  std::string to_string() const;

  const boost::dynamic_bitset<std::uint64_t>& bits() const noexcept { return bits_; }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.bits_ == b.bits_; }

  /// Numeric order (highest point most significant); sets of different
  /// degree compare by degree first.
  friend std::strong_ordering operator<=>(const PointSet& a, const PointSet& b);

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

}  // namespace pmod
