#pragma once

#include <span>
#include <vector>

#include "pmod/perm_group.hpp"

namespace pmod {

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Level i stabilizes base points b_0..b_{i-1}; its basic orbit holds the
/// images of b_i and `transversal(i, y)` is a fixed element u with b_i^u = y.
/// Every group element factors uniquely as u_{k-1} * ... * u_1 * u_0 with
/// u_i drawn from level i.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t levels() const noexcept { return levels_.size(); }
  const std::vector<Point>& base() const noexcept { return base_; }

  BigInt order() const;

  /// Sifts g through the chain.
  bool contains(const Permutation& g) const;

  const std::vector<Point>& orbit(std::size_t level) const { return levels_[level].orbit; }
  const Permutation& transversal(std::size_t level, Point image) const;
  const std::vector<Permutation>& strong_generators(std::size_t level) const {
    return levels_[level].generators;
  }

 private:
  struct Level {
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<int> slot;                  // point -> index into transversals, -1 if outside orbit
    std::vector<Permutation> transversals;  // parallel to orbit
  };

  void add_base_point(Point b);
  void rebuild_orbit(std::size_t level);
  /// Strips g through levels [from, end); returns the residue and the level
  /// where sifting stopped (levels() when it went through).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;

  std::size_t degree_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

}  // namespace pmod
