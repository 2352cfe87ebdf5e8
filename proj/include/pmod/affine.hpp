#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pmod/finite_field.hpp"
#include "pmod/perm_group.hpp"

namespace pmod {

using Matrix = std::vector<std::vector<FieldElem>>;

/// v -> (v^sigma) A + b, with sigma = x -> x^(p^frobenius) applied entrywise
/// and v a row vector.
struct SemilinearMap {
  Matrix matrix;
  std::uint32_t frobenius = 0;
  std::vector<FieldElem> translation;  // empty means zero
};

/// Affine group V H with V = GF(q)^dim. Points of V are numbered by the
/// base-q positional encoding of the coordinates, last coordinate least
/// significant; the zero vector is point 0.
struct AffineSpec {
  FiniteField field;
  std::uint32_t dim = 1;
  std::vector<SemilinearMap> generators;
};

Point vec_to_point(const AffineSpec& spec, std::span<const FieldElem> coords);
std::vector<FieldElem> point_to_vec(const AffineSpec& spec, Point point);

bool is_invertible(const FiniteField& field, const Matrix& m);

/// Image of `point` under one semilinear map.
Point apply_semilinear(const AffineSpec& spec, const SemilinearMap& map, Point point);

/// Translations by x^j e_i (an additive basis of V) followed by the spec's
/// generators. Throws InvalidArgument on a singular or misshapen matrix.
PermGroup build_affine(const AffineSpec& spec, Limits limits = {});

/// A permutation group on the vectors of GF(q)^dim together with the vector
/// space arithmetic needed by witness constructions. The group is expected
/// to contain all translations; `linear_part` is the stabilizer of 0.
class AffineGroup {
 public:
  AffineGroup(FiniteField field, std::uint32_t dim, PermGroup group);

  static AffineGroup from_spec(const AffineSpec& spec, Limits limits = {});

  const FiniteField& field() const noexcept { return field_; }
  std::uint32_t dim() const noexcept { return dim_; }
  std::size_t space_size() const noexcept { return size_; }
  const PermGroup& group() const noexcept { return group_; }

  Point add(Point a, Point b) const;
  Point neg(Point a) const;
  Point scale(FieldElem c, Point a) const;

  std::vector<FieldElem> coordinates(Point point) const;
  Point point(std::span<const FieldElem> coords) const;

  PermGroup linear_part() const;

 private:
  FiniteField field_;
  std::uint32_t dim_;
  std::size_t size_;
  PermGroup group_;
};

}  // namespace pmod
