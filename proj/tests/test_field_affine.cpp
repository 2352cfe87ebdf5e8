#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pmod/affine.hpp"
#include "pmod/errors.hpp"
#include "pmod/finite_field.hpp"
#include "pmod/zoo.hpp"

using namespace pmod;

namespace {

struct FieldCase {
  std::uint32_t p, k;
};

std::vector<FieldCase> all_fields() {
  std::vector<FieldCase> out;
  for (std::uint32_t p = 2; p <= 61; ++p)
    if (is_prime(p)) out.push_back({p, 1});
  for (FieldCase c : {FieldCase{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) out.push_back(c);
  return out;
}

/// Product of two elements by schoolbook polynomial multiplication and
/// reduction by the field's modulus.
std::uint32_t slow_mul(const FiniteField& f, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = f.characteristic(), k = f.extension_degree();
  std::vector<std::uint32_t> da(k), db(k), prod(2 * k, 0);
  for (std::uint32_t i = 0; i < k; ++i, a /= p, b /= p) {
    da[i] = a % p;
    db[i] = b % p;
  }
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  const auto& m = f.modulus();
  for (std::uint32_t d = 2 * k - 1; d >= k; --d) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + p * p - c * m[i] % p) % p;
  }
  std::uint32_t r = 0;
  for (std::uint32_t i = k; i-- > 0;) r = r * p + prod[i];
  return r;
}

}  // namespace

TEST(FiniteField, AxiomsHoldForEveryTableField) {
  for (auto [p, k] : all_fields()) {
    const FiniteField f = build_field(p, k);
    const std::uint32_t q = f.size();
    SCOPED_TRACE("q=" + std::to_string(q));
    for (std::uint32_t a = 0; a < q; ++a) {
      ASSERT_EQ(f.add(a, 0), a);
      ASSERT_EQ(f.mul(a, 1), a);
      ASSERT_EQ(f.add(a, f.neg(a)), 0u);
      if (a != 0) {
        ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
      }
      for (std::uint32_t b = 0; b < q; ++b) {
        ASSERT_EQ(f.add(a, b), f.add(b, a));
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
        ASSERT_EQ(f.mul(a, b), slow_mul(f, a, b));
        for (std::uint32_t c = 0; c < q; c += (q > 16 ? 3 : 1)) {
          ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
    EXPECT_EQ(f.multiplicative_order(f.primitive_element()), q - 1);
    EXPECT_THROW(f.inv(0), InvalidArgument);
  }
}

TEST(FiniteField, FrobeniusIsAnAutomorphismOfOrderK) {
  for (auto [p, k] : all_fields()) {
    const FiniteField f = build_field(p, k);
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      EXPECT_EQ(f.frobenius(a), f.pow(a, p));
      EXPECT_EQ(f.frobenius(a, k), a);
      for (std::uint32_t b = 0; b < f.size(); ++b) {
        EXPECT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
        EXPECT_EQ(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
      }
    }
  }
}

TEST(FiniteField, PrimeFieldIsIntegersModP) {
  const FiniteField f = build_field(5, 1);
  for (std::uint32_t a = 0; a < 5; ++a)
    for (std::uint32_t b = 0; b < 5; ++b) {
      EXPECT_EQ(f.add(a, b), (a + b) % 5);
      EXPECT_EQ(f.mul(a, b), (a * b) % 5);
    }
  EXPECT_EQ(f.from_int(-1), 4u);
}

TEST(FiniteField, GF8InversesAndBadInputs) {
  const FiniteField f = build_field(2, 3);
  EXPECT_EQ(f.size(), 8u);
  for (std::uint32_t x = 1; x < 8; ++x) EXPECT_EQ(f.mul(x, f.inv(x)), 1u);
  EXPECT_THROW(build_field(4, 1), InvalidArgument);
  EXPECT_THROW(build_field(2, 7), InvalidArgument);
  EXPECT_THROW(build_field(11, 2), InvalidArgument);
}

TEST(Affine, PointEncoding) {
  const AffineSpec gf3sq{build_field(3, 1), 2, {}};
  const std::vector<FieldElem> v{1, 1};
  EXPECT_EQ(vec_to_point(gf3sq, v), 4u);
  const AffineSpec gf8{build_field(2, 3), 1, {}};
  const std::vector<FieldElem> w{5};
  EXPECT_EQ(vec_to_point(gf8, w), 5u);
  for (Point x = 0; x < 9; ++x) EXPECT_EQ(vec_to_point(gf3sq, point_to_vec(gf3sq, x)), x);
  const AffineSpec gf4cube{build_field(2, 2), 3, {}};
  for (Point x = 0; x < 64; ++x) EXPECT_EQ(vec_to_point(gf4cube, point_to_vec(gf4cube, x)), x);
}

TEST(Affine, BuildsDihedralAndJ) {
  EXPECT_EQ(build_affine(dihedral_spec(3)).order(), 6);
  EXPECT_EQ(build_affine(dihedral_spec(5)).order(), 10);
  const auto j = build_affine(agammal_spec(1, 8));
  EXPECT_EQ(j.degree(), 8u);
  EXPECT_EQ(j.order(), 168);
  EXPECT_EQ(named_group("AGL(1,5)").order(), 20);
  EXPECT_EQ(named_group("AGL(2,3)").order(), 432);
  EXPECT_EQ(named_group("AGammaL(1,9)").order(), 144);
}

TEST(Affine, MapsAreSemilinear) {
  // x -> w * x^2 + 1 on GF(8), checked against direct field arithmetic.
  const FiniteField f = build_field(2, 3);
  const AffineSpec spec{f, 1, {SemilinearMap{{{f.primitive_element()}}, 1, {1}}}};
  for (Point x = 0; x < 8; ++x)
    EXPECT_EQ(apply_semilinear(spec, spec.generators[0], x), f.add(f.mul(f.frobenius(x), f.primitive_element()), 1));
}

TEST(Affine, RejectsSingularMatrices) {
  const FiniteField f = build_field(3, 1);
  EXPECT_FALSE(is_invertible(f, Matrix{{1, 2}, {2, 1}}));
  EXPECT_TRUE(is_invertible(f, Matrix{{1, 1}, {0, 1}}));
  const AffineSpec bad{f, 2, {SemilinearMap{{{1, 2}, {2, 1}}, 0, {}}}};
  EXPECT_THROW(build_affine(bad), InvalidArgument);
}

TEST(Affine, VectorArithmetic) {
  const auto g = AffineGroup::from_spec(agl_spec(2, 3));
  const auto& f = g.field();
  for (Point a = 0; a < 9; ++a) {
    EXPECT_EQ(g.add(a, g.neg(a)), 0u);
    for (Point b = 0; b < 9; ++b) {
      const auto ca = g.coordinates(a), cb = g.coordinates(b);
      const std::vector<FieldElem> sum{f.add(ca[0], cb[0]), f.add(ca[1], cb[1])};
      EXPECT_EQ(g.add(a, b), g.point(sum));
    }
  }
  const auto linear = g.linear_part();
  EXPECT_EQ(linear.order(), 48);
  for (const auto& h : linear.generators()) EXPECT_EQ(h[0], 0u);
}

TEST(Zoo, CatalogueNamesBuild) {
  for (const auto& name : zoo_names()) {
    const auto g = build_named(name);
    EXPECT_GT(g.group.order(), 0) << name;
    EXPECT_EQ(g.name, name);
  }
  EXPECT_EQ(named_group("Product(D6,D6)").order(), 36);
  EXPECT_THROW(build_named("Nonsense(3)"), InvalidArgument);
  EXPECT_THROW(build_named("AGL(1,6)"), InvalidArgument);
}
