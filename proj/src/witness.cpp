#include "pmod/witness.hpp"

#include <algorithm>

#include "pmod/errors.hpp"
#include "pmod/sylow.hpp"

namespace pmod {

namespace {

const Permutation* first_of_order(const PermGroup& g, std::uint64_t order) {
  for (const auto& x : g.elements())
    if (x.order() == order) return &x;
  return nullptr;
}

std::vector<Point> cyclic_orbit(const Permutation& t, Point v) {
  std::vector<Point> orbit{v};
  for (Point x = t[v]; x != v; x = t[x]) orbit.push_back(x);
  return orbit;
}

// Fixed-point sets of the non-identity elements of a linear group.
std::vector<boost::dynamic_bitset<std::uint64_t>> fixed_sets(const PermGroup& linear) {
  std::vector<boost::dynamic_bitset<std::uint64_t>> sets;
  for (const auto& h : linear.elements()) {
    if (h.is_identity()) continue;
    boost::dynamic_bitset<std::uint64_t> fix(linear.degree());
    for (Point x = 0; x < linear.degree(); ++x)
      if (h[x] == x) fix.set(x);
    sets.push_back(std::move(fix));
  }
  return sets;
}

}  // namespace

PointSet translation_witness(const AffineGroup& g, std::uint64_t p) {
  if (g.field().characteristic() != p) throw Inapplicable("p does not divide |V|");
  if (g.space_size() == p) throw Inapplicable("|V| = p: no order-p subgroup W short of V, and p^2 does not divide |G|");
  PointSet w(g.space_size());
  Point v = 1;  // least nonzero vector
  Point x = 0;
  for (std::uint64_t i = 0; i < p; ++i) {
    w.insert(x);
    x = g.add(x, v);
  }
  return w;
}

std::optional<Point> regular_vector(const PermGroup& linear) {
  auto fixes = fixed_sets(linear);
  for (Point v = 0; v < linear.degree(); ++v) {
    bool regular = std::none_of(fixes.begin(), fixes.end(), [&](const auto& f) { return f.test(v); });
    if (regular) return v;
  }
  return std::nullopt;
}

std::optional<std::pair<Point, Point>> regular_pair(const PermGroup& linear, bool nonzero_only) {
  const std::size_t n = linear.degree();
  if (n * n > (std::size_t{1} << 22)) throw ResourceLimit("V + V scan exceeds 2^22 pairs");
  auto fixes = fixed_sets(linear);
  const Point lo = nonzero_only ? 1 : 0;
  std::vector<std::size_t> fixing_v;
  for (Point v = lo; v < n; ++v) {
    fixing_v.clear();
    for (std::size_t i = 0; i < fixes.size(); ++i)
      if (fixes[i].test(v)) fixing_v.push_back(i);
    for (Point w = lo; w < n; ++w) {
      bool regular = std::none_of(fixing_v.begin(), fixing_v.end(), [&](std::size_t i) { return fixes[i].test(w); });
      if (regular) return std::make_pair(v, w);
    }
  }
  return std::nullopt;
}

std::vector<PointSet> orbit_witness_odd_p(const AffineGroup& g, std::uint64_t p) {
  if (p == 2) throw Inapplicable("orbit-union construction needs an odd prime");
  PermGroup linear = g.linear_part();
  const Permutation* t = first_of_order(linear, p);
  if (!t) throw Inapplicable("linear part has no element of order p");
  auto pair = regular_pair(linear, true);
  if (!pair) throw Inapplicable("no regular orbit of H on V + V");
  auto [v, w] = *pair;

  auto o1 = cyclic_orbit(*t, v), o2 = cyclic_orbit(*t, w);
  if (o1.size() == 1 && o2.size() == 1) throw std::logic_error("element of order p fixes a regular pair");
  if (o2.size() == 1) {
    w = g.add(v, w);
    o2 = cyclic_orbit(*t, w);
  } else if (o1.size() == 1) {
    v = g.add(v, w);
    o1 = cyclic_orbit(*t, v);
  }

  const std::size_t n = g.space_size();
  PointSet with_o1(n, {0});
  for (Point x : o1) with_o1.insert(x);
  if (std::find(o1.begin(), o1.end(), w) != o1.end()) return {with_o1};

  PointSet both = with_o1;
  for (Point x : o2) both.insert(x);
  PointSet fallback = with_o1;
  fallback.insert(w);
  return {both, fallback};
}

PointSet p2_regular_witness(const AffineGroup& g) {
  PermGroup linear = g.linear_part();
  const Permutation* t = first_of_order(linear, 2);
  if (!t) throw Inapplicable("linear part has no involution");
  auto v = regular_vector(linear);
  if (!v) throw Inapplicable("H has no regular orbit on V");
  return PointSet(g.space_size(), {0, *v, (*t)[*v]});
}

PointSet metacyclic_witness(const AffineGroup& g) {
  if (g.field().characteristic() == 2) throw Inapplicable("v and -v coincide in characteristic 2");
  PermGroup linear = g.linear_part();
  PermGroup z = center(linear);
  for (const auto& u : linear.elements()) {
    if (u.order() != 2 || z.contains(u)) continue;
    std::optional<Point> v, w;
    for (Point x = 1; x < g.space_size(); ++x) {
      if (!v && u[x] == g.neg(x)) v = x;
      if (!w && u[x] == x) w = x;
    }
    if (v && w) return PointSet(g.space_size(), {0, *w, *v, g.neg(*v)});
  }
  throw Inapplicable("no noncentral involution with both eigenvectors");
}

PointSet product_diagonal_witness(std::size_t first_degree, std::size_t second_degree) {
  if (first_degree < 2 || second_degree < 2) throw Inapplicable("product factors need at least two points");
  return PointSet(first_degree * second_degree, {0, static_cast<Point>(second_degree + 1)});
}

PointSet cyclic_orbit_witness(const PermGroup& g, std::uint64_t p) {
  const Permutation* t = first_of_order(g, p);
  if (!t) throw Inapplicable("group has no element of order p");
  Point v = 0;
  while ((*t)[v] == v) ++v;
  auto orbit = cyclic_orbit(*t, v);
  return PointSet::from_points(g.degree(), orbit);
}

std::vector<WitnessCandidate> witness_candidates(const BuiltGroup& g, std::uint64_t p,
                                                 std::vector<std::string>* skipped) {
  std::vector<WitnessCandidate> out;
  auto attempt = [&](const std::string& stage, auto&& make) {
    try {
      for (auto& s : make()) out.push_back({stage, std::move(s)});
    } catch (const Inapplicable& e) {
      if (skipped) skipped->push_back(stage + ": " + e.what());
    }
  };
  auto one = [](PointSet s) { return std::vector<PointSet>{std::move(s)}; };

  if (g.product_degrees) {
    attempt("product-diagonal", [&] { return one(product_diagonal_witness(g.product_degrees->first, g.product_degrees->second)); });
  }
  if (g.affine) {
    const AffineGroup& a = *g.affine;
    attempt("translation-subgroup", [&] { return one(translation_witness(a, p)); });
    if (p == 2) {
      attempt("regular-orbit-involution", [&] { return one(p2_regular_witness(a)); });
      attempt("eigenvector", [&] { return one(metacyclic_witness(a)); });
    } else {
      attempt("orbit-union", [&] { return orbit_witness_odd_p(a, p); });
    }
  }
  attempt("cyclic-orbit", [&] { return one(cyclic_orbit_witness(g.group, p)); });
  return out;
}

ReductionConditions reduction_conditions(const AffineGroup& g, std::uint64_t p) {
  ReductionConditions c;
  PermGroup linear = g.linear_part();
  c.coprime = g.field().characteristic() != p;
  c.residual_is_whole = o_pprime_residual(linear, p).order() == linear.order();
  c.is_opp = is_Opp(linear, p);
  if (linear.order() % p == 0) {
    PermGroup sylow = find_sylow(linear, p);
    c.sylow_order_p_squared = sylow.order() == p * p;
    c.sylow_elementary_abelian = is_elementary_abelian(sylow, p);
  }
  return c;
}

}  // namespace pmod
