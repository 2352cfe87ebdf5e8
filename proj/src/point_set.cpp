#include "pmod/point_set.hpp"

#include "pmod/errors.hpp"

namespace pmod {

PointSet::PointSet(std::size_t degree, std::initializer_list<Point> points) : bits_(degree) {
  for (Point x : points) insert(x);
}

PointSet PointSet::from_points(std::size_t degree, std::span<const Point> points) {
  PointSet s(degree);
  for (Point x : points) s.insert(x);
  return s;
}

PointSet PointSet::from_mask(std::size_t degree, std::uint64_t mask) {
  if (degree < 64 && (mask >> degree) != 0) throw InvalidArgument("mask has bits beyond degree");
  if (degree > 64) throw InvalidArgument("mask form limited to degree 64");
  PointSet s(degree);
  for (std::size_t i = 0; i < degree; ++i)
    if ((mask >> i) & 1u) s.bits_.set(i);
  return s;
}

PointSet PointSet::full(std::size_t degree) {
  PointSet s(degree);
  s.bits_.set();
  return s;
}

void PointSet::insert(Point x) {
  if (x >= bits_.size()) throw InvalidArgument("point " + std::to_string(x) + " outside domain");
  bits_.set(x);
}

void PointSet::erase(Point x) {
  if (x >= bits_.size()) throw InvalidArgument("point " + std::to_string(x) + " outside domain");
  bits_.reset(x);
}

std::vector<Point> PointSet::points() const {
  std::vector<Point> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != bits_.npos; i = bits_.find_next(i))
    out.push_back(static_cast<Point>(i));
  return out;
}

PointSet PointSet::image(const Permutation& g) const {
  if (g.degree() != degree()) throw InvalidArgument("degree mismatch between set and permutation");
  PointSet out(degree());
  for (auto i = bits_.find_first(); i != bits_.npos; i = bits_.find_next(i))
    out.bits_.set(g[static_cast<Point>(i)]);
  return out;
}

bool PointSet::is_stabilized_by(const Permutation& g) const {
  if (g.degree() != degree()) throw InvalidArgument("degree mismatch between set and permutation");
  for (auto i = bits_.find_first(); i != bits_.npos; i = bits_.find_next(i))
    if (!bits_.test(g[static_cast<Point>(i)])) return false;
  return true;
}

std::uint64_t PointSet::to_mask() const {
  if (degree() > 64) throw InvalidArgument("mask form limited to degree 64");
  std::uint64_t mask = 0;
  for (auto i = bits_.find_first(); i != bits_.npos; i = bits_.find_next(i)) mask |= std::uint64_t{1} << i;
  return mask;
}

std::string PointSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Point x : points()) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.degree(); i-- > 0;) {
    bool x = a.bits_.test(i), y = b.bits_.test(i);
    if (x != y) return x ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace pmod
