#include "pmod/affine.hpp"

#include <string>

#include "pmod/errors.hpp"

namespace pmod {

namespace {

std::size_t space_size_of(const FiniteField& f, std::uint32_t dim) {
  std::size_t n = 1;
  for (std::uint32_t i = 0; i < dim; ++i) n *= f.size();
  return n;
}

Point encode(const FiniteField& f, std::span<const FieldElem> coords) {
  std::uint64_t point = 0;
  for (FieldElem c : coords) {
    if (c >= f.size()) throw InvalidArgument("coordinate outside the field");
    point = point * f.size() + c;
  }
  return static_cast<Point>(point);
}

std::vector<FieldElem> decode(const FiniteField& f, std::uint32_t dim, Point point) {
  std::vector<FieldElem> coords(dim);
  for (std::size_t i = dim; i-- > 0;) {
    coords[i] = point % f.size();
    point /= f.size();
  }
  if (point != 0) throw InvalidArgument("point outside the vector space");
  return coords;
}

}  // namespace

Point vec_to_point(const AffineSpec& spec, std::span<const FieldElem> coords) {
  if (coords.size() != spec.dim) throw InvalidArgument("coordinate vector has wrong length");
  return encode(spec.field, coords);
}

std::vector<FieldElem> point_to_vec(const AffineSpec& spec, Point point) {
  return decode(spec.field, spec.dim, point);
}

bool is_invertible(const FiniteField& f, const Matrix& m) {
  Matrix a = m;
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    const FieldElem inv = f.inv(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const FieldElem factor = f.mul(a[r][col], inv);
      for (std::size_t c = col; c < n; ++c) a[r][c] = f.sub(a[r][c], f.mul(factor, a[col][c]));
    }
  }
  return true;
}

Point apply_semilinear(const AffineSpec& spec, const SemilinearMap& map, Point point) {
  const FiniteField& f = spec.field;
  auto v = decode(f, spec.dim, point);
  for (auto& c : v) c = f.frobenius(c, map.frobenius);
  std::vector<FieldElem> out(spec.dim, 0);
  for (std::uint32_t j = 0; j < spec.dim; ++j) {
    FieldElem acc = 0;
    for (std::uint32_t i = 0; i < spec.dim; ++i) acc = f.add(acc, f.mul(v[i], map.matrix[i][j]));
    out[j] = map.translation.empty() ? acc : f.add(acc, map.translation[j]);
  }
  return encode(f, out);
}

PermGroup build_affine(const AffineSpec& spec, Limits limits) {
  const FiniteField& f = spec.field;
  if (spec.dim == 0) throw InvalidArgument("affine dimension must be positive");
  const std::size_t n = space_size_of(f, spec.dim);
  if (n > limits.max_degree) throw ResourceLimit("affine space has too many points");

  for (const auto& map : spec.generators) {
    if (map.matrix.size() != spec.dim) throw InvalidArgument("matrix has wrong number of rows");
    for (const auto& row : map.matrix) {
      if (row.size() != spec.dim) throw InvalidArgument("matrix row has wrong length");
      for (FieldElem c : row)
        if (c >= f.size()) throw InvalidArgument("matrix entry outside the field");
    }
    if (!map.translation.empty() && map.translation.size() != spec.dim)
      throw InvalidArgument("translation has wrong length");
    if (!is_invertible(f, map.matrix)) throw InvalidArgument("semilinear generator has a singular matrix");
  }

  std::vector<Permutation> gens;
  Matrix identity(spec.dim, std::vector<FieldElem>(spec.dim, 0));
  for (std::uint32_t i = 0; i < spec.dim; ++i) identity[i][i] = 1;
  for (std::uint32_t i = 0; i < spec.dim; ++i) {
    FieldElem basis = 1;  // x^j
    for (std::uint32_t j = 0; j < f.extension_degree(); ++j, basis *= f.characteristic()) {
      SemilinearMap t{identity, 0, std::vector<FieldElem>(spec.dim, 0)};
      t.translation[i] = basis;
      std::vector<Point> img(n);
      for (Point x = 0; x < n; ++x) img[x] = apply_semilinear(spec, t, x);
      gens.emplace_back(std::move(img));
    }
  }
  for (const auto& map : spec.generators) {
    std::vector<Point> img(n);
    for (Point x = 0; x < n; ++x) img[x] = apply_semilinear(spec, map, x);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens), limits);
}

AffineGroup::AffineGroup(FiniteField field, std::uint32_t dim, PermGroup group)
    : field_(std::move(field)), dim_(dim), size_(space_size_of(field_, dim)), group_(std::move(group)) {
  if (group_.degree() != size_) throw InvalidArgument("group degree does not match |V|");
}

AffineGroup AffineGroup::from_spec(const AffineSpec& spec, Limits limits) {
  return AffineGroup(spec.field, spec.dim, build_affine(spec, limits));
}

Point AffineGroup::add(Point a, Point b) const {
  auto va = coordinates(a), vb = coordinates(b);
  for (std::uint32_t i = 0; i < dim_; ++i) va[i] = field_.add(va[i], vb[i]);
  return point(va);
}

Point AffineGroup::neg(Point a) const {
  auto v = coordinates(a);
  for (auto& c : v) c = field_.neg(c);
  return point(v);
}

Point AffineGroup::scale(FieldElem c, Point a) const {
  auto v = coordinates(a);
  for (auto& x : v) x = field_.mul(c, x);
  return point(v);
}

std::vector<FieldElem> AffineGroup::coordinates(Point p) const { return decode(field_, dim_, p); }

Point AffineGroup::point(std::span<const FieldElem> coords) const {
  if (coords.size() != dim_) throw InvalidArgument("coordinate vector has wrong length");
  return encode(field_, coords);
}

PermGroup AffineGroup::linear_part() const { return point_stabilizer(group_, 0); }

}  // namespace pmod
