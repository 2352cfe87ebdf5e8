#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "pmod/affine.hpp"
#include "pmod/classify.hpp"
#include "pmod/counting.hpp"
#include "pmod/report.hpp"
#include "pmod/stabilizer.hpp"
#include "pmod/sylow.hpp"
#include "pmod/zoo.hpp"

using namespace pmod;

namespace {

constexpr std::size_t kCases = 100;

std::vector<BuiltGroup> small_zoo() {
  std::vector<BuiltGroup> out;
  for (const auto& name : zoo_names()) {
    auto g = build_named(name);
    if (g.group.degree() <= 16) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST(Property, CycleNotationRoundTrips) {
  std::mt19937_64 rng(1);
  for (std::size_t i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 32;
    const auto g = gen::permutation(rng, n);
    EXPECT_EQ(parse_cycles(format_cycles(g), n), g);
  }
}

TEST(Property, InverseAndAssociativity) {
  std::mt19937_64 rng(2);
  for (std::size_t i = 0; i < kCases; ++i) {
    const std::size_t n = 1 + rng() % 20;
    const auto a = gen::permutation(rng, n), b = gen::permutation(rng, n), c = gen::permutation(rng, n);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    EXPECT_EQ(a.pow(static_cast<std::int64_t>(a.order())), Permutation(n));
  }
}

TEST(Property, GroupOrderMatchesClosure) {
  std::mt19937_64 rng(3);
  for (std::size_t i = 0; i < kCases; ++i) {
    const auto g = gen::group(rng, 1, 8);
    const auto ref = oracle::closure(g.degree(), oracle::images(g.generators()));
    ASSERT_EQ(g.order(), ref.size());
    ASSERT_EQ(g.elements().size(), ref.size());
    // Closed under products and inverses.
    const auto& els = g.elements();
    for (std::size_t k = 0; k < 20; ++k) {
      const auto& x = els[rng() % els.size()];
      const auto& y = els[rng() % els.size()];
      EXPECT_TRUE(g.contains(x * y));
      EXPECT_TRUE(g.contains(x.inverse()));
    }
  }
}

TEST(Property, OrbitsPartitionAndDivideOrder) {
  std::mt19937_64 rng(4);
  for (std::size_t i = 0; i < kCases; ++i) {
    const auto g = gen::group(rng, 1, 12);
    const auto orbs = orbits(g);
    EXPECT_EQ(orbs, oracle::orbits(g.degree(), oracle::images(g.generators())));
    std::size_t total = 0;
    for (const auto& o : orbs) {
      total += o.size();
      EXPECT_EQ(g.order() % o.size(), 0);
    }
    EXPECT_EQ(total, g.degree());
  }
}

TEST(Property, FixedSubsetsAreOrbitUnions) {
  // Exhaustive over all subsets, n <= 12.
  std::mt19937_64 rng(5);
  for (std::size_t i = 0; i < kCases; ++i) {
    const auto g = gen::group(rng, 1, 12);
    const auto orbs = orbits(g);
    std::uint64_t fixed = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.degree()); ++m) {
      bool by_gens = true;
      for (const auto& x : g.generators()) by_gens = by_gens && image_mask(x, m) == m;
      bool union_of_orbits = true;
      for (const auto& o : orbs) {
        const bool first = (m >> o.front()) & 1u;
        for (Point x : o) union_of_orbits = union_of_orbits && (((m >> x) & 1u) == first);
      }
      ASSERT_EQ(by_gens, union_of_orbits);
      fixed += by_gens;
    }
    EXPECT_EQ(subsets_fixed_count(g.generators(), g.degree()), fixed);
  }
}

TEST(Property, StabilizerConjugationCovariance) {
  std::mt19937_64 rng(6);
  const auto zoo = small_zoo();
  for (std::size_t i = 0; i < kCases; ++i) {
    const auto& g = zoo[rng() % zoo.size()].group;
    const auto d = gen::subset(rng, g.degree());
    const auto& els = g.elements();
    const auto x = els[rng() % els.size()];
    const auto stab = setwise_stabilizer(g, d);
    const auto moved = setwise_stabilizer(g, d.image(x));
    EXPECT_EQ(stab.order(), moved.order());
    for (const auto& s : stab.generators()) EXPECT_TRUE(moved.contains(s.conjugate_by(x)));
  }
}

TEST(Property, BacktrackAgreesWithElementFilter) {
  std::mt19937_64 rng(7);
  const auto zoo = small_zoo();
  for (std::size_t i = 0; i < kCases; ++i) {
    const PermGroup g = i % 2 ? zoo[rng() % zoo.size()].group : gen::group(rng, 2, 10);
    const auto d = gen::subset(rng, g.degree());
    const auto filter = setwise_stabilizer(g, d);
    const auto backtrack = setwise_stabilizer_backtrack(g, d);
    ASSERT_EQ(filter.order(), backtrack.order());
    for (const auto& x : backtrack.generators()) EXPECT_TRUE(filter.contains(x));
    const auto elems = oracle::closure(g.degree(), oracle::images(g.generators()));
    EXPECT_EQ(filter.order(), oracle::stabilizer_order(elems, d.to_mask()));
  }
}

TEST(Property, SylowAxioms) {
  std::mt19937_64 rng(8);
  std::size_t cases = 0;
  auto check = [&](const PermGroup& g, std::uint64_t p) {
    const auto s = all_sylows(g, p);
    EXPECT_EQ(s.count % p, 1u);
    EXPECT_EQ(s.representative.order_u64(), p_part(g.order_u64(), p));
    EXPECT_TRUE(is_p_group(s.representative, p));
    EXPECT_EQ(s.count * normalizer(g, s.representative).order_u64(), g.order_u64());
    ++cases;
  };
  for (const auto& name : zoo_names()) {
    const auto g = named_group(name);
    for (auto p : gen::prime_divisors(g.order_u64())) check(g, p);
  }
  while (cases < 2 * kCases) {
    const auto g = gen::group(rng, 2, 8);
    if (g.order() == 1) continue;
    const auto primes = gen::prime_divisors(g.order_u64());
    check(g, primes[rng() % primes.size()]);
  }
}

TEST(Property, FrattiniCenterElementAndOrbitFloor) {
  std::mt19937_64 rng(9);
  std::size_t cases = 0;
  auto check = [&](const PermGroup& g, std::uint64_t p) {
    const auto sylow = find_sylow(g, p);
    if (is_elementary_abelian(sylow, p)) return;
    const auto z = frattini_center_element(sylow, p);
    EXPECT_EQ(z.order(), p);
    for (const auto& x : sylow.generators()) EXPECT_EQ(x * z, z * x);
    EXPECT_TRUE(orbit_size_floor_check(sylow, p, z));
    ++cases;
  };
  for (const auto& name : zoo_names()) {
    const auto g = named_group(name);
    for (auto p : gen::prime_divisors(g.order_u64())) check(g, p);
  }
  for (std::size_t i = 0; i < 20 * kCases && cases < kCases; ++i) {
    const auto g = gen::group(rng, 4, 9);
    if (g.order() == 1) continue;
    for (auto p : gen::prime_divisors(g.order_u64())) check(g, p);
  }
  EXPECT_GE(cases, kCases);
}

TEST(Property, ResidualHasCoprimeIndex) {
  std::mt19937_64 rng(10);
  for (std::size_t i = 0; i < kCases; ++i) {
    const auto g = gen::group(rng, 2, 7);
    if (g.order() == 1) continue;
    for (auto p : gen::prime_divisors(g.order_u64())) {
      const auto r = o_pprime_residual(g, p);
      EXPECT_TRUE(r.is_subgroup_of(g));
      EXPECT_NE((g.order() / r.order()) % p, 0);
    }
  }
}

TEST(Property, ConcealedImpliesExtremeAndWitnessesVerify) {
  std::mt19937_64 rng(11);
  std::size_t cases = 0;
  while (cases < kCases) {
    const auto g = gen::group(rng, 2, 8);
    if (g.order() == 1) continue;
    const auto primes = gen::prime_divisors(g.order_u64());
    const auto p = primes[rng() % primes.size()];
    const auto conc = is_p_concealed(g, p);
    const auto r = classify_moderation(g, p, Strategy::Exhaustive);
    if (conc.concealed) {
      EXPECT_EQ(r.verdict, Verdict::Extreme);
    }
    if (r.verdict == Verdict::Moderate) {
      const auto part = stab_p_part(g, *r.witness, p);
      EXPECT_EQ(part, r.witness_p_part);
      EXPECT_GT(part, 1u);
      EXPECT_LT(part, r.group_p_part);
    } else if (r.exhaustive) {
      // Every subset has p-part 1 or full.
      const SubsetCensus census(g);
      for (std::uint64_t m = 0; m < census.subset_count(); ++m) {
        const auto part = census.stab_p_part(m, p);
        EXPECT_TRUE(part == 1 || part == r.group_p_part);
      }
    }
    ++cases;
  }
}

TEST(Property, ConstructiveNeverContradictsExhaustive) {
  std::mt19937_64 rng(12);
  for (std::size_t i = 0; i < kCases;) {
    const auto g = gen::group(rng, 2, 9);
    if (g.order() == 1) continue;
    const auto primes = gen::prime_divisors(g.order_u64());
    const auto p = primes[rng() % primes.size()];
    const auto ex = classify_moderation(g, p, Strategy::Exhaustive);
    const auto con = classify_moderation(g, p, Strategy::Constructive, {i, 50, 22});
    EXPECT_EQ(ex.verdict, con.verdict);
    ++i;
  }
}

TEST(Property, AffinePointRoundTrip) {
  std::mt19937_64 rng(13);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}};
  for (std::size_t i = 0; i < kCases; ++i) {
    const auto [p, k] = fields[rng() % fields.size()];
    const AffineSpec spec{build_field(p, k), static_cast<std::uint32_t>(1 + rng() % 3), {}};
    std::size_t size = 1;
    for (std::uint32_t d = 0; d < spec.dim; ++d) size *= spec.field.size();
    const Point x = static_cast<Point>(rng() % size);
    EXPECT_EQ(vec_to_point(spec, point_to_vec(spec, x)), x);
  }
}

TEST(Property, ReportsRoundTrip) {
  std::mt19937_64 rng(14);
  for (std::size_t i = 0; i < kCases;) {
    const auto g = gen::group(rng, 2, 8);
    if (g.order() == 1) continue;
    const auto primes = gen::prime_divisors(g.order_u64());
    const auto p = primes[rng() % primes.size()];
    const auto r = classify_moderation(g, p, i % 2 ? Strategy::Exhaustive : Strategy::Constructive);
    const nlohmann::json j = r;
    EXPECT_EQ(nlohmann::json::parse(j.dump()).get<ModerationReport>(), r);
    ++i;
  }
}
