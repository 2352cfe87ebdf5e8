#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pmod {

using Point = std::uint32_t;

/// A permutation of {0, ..., n-1} stored by its image array.
///
/// Points are acted on from the right: x^(ab) = (x^a)^b. Consequently
/// `a * b` means "apply a, then b", i.e. (a * b)[x] == b[a[x]]. Every
/// witness construction in this library relies on that convention, in
/// particular orbits written as {v, v^t, v^(t^2), ...}.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Throws InvalidArgument unless `images` is a bijection on {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Least k >= 1 with this^k = identity.
  std::uint64_t order() const;

  Permutation pow(std::int64_t k) const;

  /// g^-1 * this * g, the conjugate under the right-action convention.
  Permutation conjugate_by(const Permutation& g) const;

  std::size_t fixed_point_count() const noexcept;

  /// Cycle lengths (including fixed points as 1-cycles), sorted ascending.
  std::vector<std::size_t> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic order on image arrays; used for deterministic tie-breaks.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  friend Permutation compose(const Permutation& a, const Permutation& b);

  std::vector<Point> images_;
};

/// Right-action product: x -> b[a[x]]. Throws InvalidArgument on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

std::uint64_t element_order(const Permutation& g);

/// Parses "(0 1 2)(3 4)" style text. Points are 0-indexed and must be
/// below `degree`; a point may appear at most once across all cycles.
/// Whitespace (and optional commas) separate points inside a cycle.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Disjoint-cycle form with fixed points omitted; identity prints as "()".
std::string format_cycles(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace pmod
