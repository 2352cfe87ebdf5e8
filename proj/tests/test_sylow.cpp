#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pmod/errors.hpp"
#include "pmod/sylow.hpp"
#include "pmod/zoo.hpp"

using namespace pmod;

namespace {

Permutation cyc(std::string_view s, std::size_t n) { return parse_cycles(s, n); }

/// Number of subgroups of order |G|_p, found as distinct closures of
/// subgroups generated by three p-elements. Only for tiny groups.
std::size_t count_sylows_by_oracle(const PermGroup& g, std::uint64_t p) {
  const auto elems = oracle::closure(g.degree(), oracle::images(g.generators()));
  const std::uint64_t target = oracle::p_part(elems.size(), p);
  std::set<std::set<oracle::Images>> found;
  std::vector<oracle::Images> p_elems;
  for (const auto& e : elems)
    if (oracle::p_part(oracle::element_order(e), p) == oracle::element_order(e)) p_elems.push_back(e);
  // Sylow subgroups of order p^a with a <= 3 are generated by at most
  // three elements.
  for (std::size_t i = 0; i < p_elems.size(); ++i)
    for (std::size_t j = i; j < p_elems.size(); ++j)
      for (std::size_t k = j; k < p_elems.size(); ++k) {
        auto h = oracle::closure(g.degree(), {p_elems[i], p_elems[j], p_elems[k]});
        if (h.size() == target) found.insert(h);
      }
  return found.size();
}

}  // namespace

TEST(PPart, Examples) {
  EXPECT_EQ(p_part(168, 3), 3u);
  EXPECT_EQ(p_part(36, 2), 4u);
  EXPECT_EQ(p_part(1, 7), 1u);
  EXPECT_EQ(p_part(BigInt(28224), 3), 9);
  EXPECT_THROW(p_part(0, 2), InvalidArgument);
  EXPECT_THROW(p_part(12, 4), InvalidArgument);
}

TEST(FindSylow, Examples) {
  EXPECT_EQ(find_sylow(named_group("AGammaL(1,8)"), 3).order(), 3);
  EXPECT_EQ(find_sylow(named_group("Sym(4)"), 2).order(), 8);
  const auto d = find_sylow(named_group("Product(D6,D6)"), 2);
  EXPECT_EQ(d.order(), 4);
  EXPECT_TRUE(is_elementary_abelian(d, 2));
}

TEST(AllSylows, Counts) {
  EXPECT_EQ(all_sylows(named_group("AGammaL(1,8)"), 3).count, 28u);
  EXPECT_EQ(all_sylows(named_group("Product(AGammaL(1,8),AGammaL(1,8))"), 3).count, 784u);
  EXPECT_EQ(all_sylows(named_group("C4"), 2).count, 1u);
  EXPECT_EQ(all_sylows(named_group("Sym(4)"), 2).count, 3u);
  EXPECT_EQ(all_sylows(named_group("Sym(4)"), 3).count, 4u);
}

TEST(AllSylows, MatchesSubgroupOracle) {
  for (const char* name : {"D6", "D10", "Sym(4)", "AGL(1,5)", "AGL(1,4)", "C4"}) {
    const auto g = named_group(name);
    for (std::uint64_t p : {2, 3, 5}) {
      if (g.order() % p != 0) continue;
      const auto s = all_sylows(g, p);
      EXPECT_EQ(s.count, count_sylows_by_oracle(g, p)) << name << " p=" << p;
      // The conjugates are pairwise distinct subgroups of the right order.
      std::set<std::vector<Permutation>> distinct;
      for (const auto& c : s.conjugates) {
        EXPECT_EQ(c.order(), s.representative.order());
        EXPECT_TRUE(c.is_subgroup_of(g));
        auto els = c.elements();
        std::sort(els.begin(), els.end());
        distinct.insert(els);
      }
      EXPECT_EQ(distinct.size(), s.count);
    }
  }
}

TEST(ElementaryAbelian, Examples) {
  EXPECT_TRUE(is_elementary_abelian(find_sylow(named_group("Product(D6,D6)"), 2), 2));
  EXPECT_FALSE(is_elementary_abelian(find_sylow(named_group("Sym(4)"), 2), 2));
  EXPECT_TRUE(is_elementary_abelian(PermGroup(3, {cyc("(0 1 2)", 3)}), 3));
  EXPECT_THROW(is_elementary_abelian(named_group("D6"), 2), InvalidArgument);
}

TEST(FrattiniCenter, Examples) {
  const auto d8 = find_sylow(named_group("Sym(4)"), 2);
  const auto z = frattini_center_element(d8, 2);
  EXPECT_EQ(z.order(), 2u);
  EXPECT_TRUE(center(d8).contains(z));
  EXPECT_EQ(frattini_subgroup(d8, 2).order(), 2);

  const PermGroup c4(4, {cyc("(0 1 2 3)", 4)});
  EXPECT_EQ(frattini_center_element(c4, 2), cyc("(0 2)(1 3)", 4));

  const auto g9 = cyc("(0 1 2 3 4 5 6 7 8)", 9);
  const PermGroup c9(9, {g9});
  const auto z9 = frattini_center_element(c9, 3);
  EXPECT_EQ(frattini_subgroup(c9, 3).order(), 3);
  EXPECT_TRUE(z9 == g9.pow(3) || z9 == g9.pow(6));
  EXPECT_EQ(z9, std::min(g9.pow(3), g9.pow(6)));

  EXPECT_THROW(frattini_center_element(find_sylow(named_group("Product(D6,D6)"), 2), 2), Inapplicable);
}

TEST(FrattiniCenter, D8ElementIsTheCentralInvolution) {
  // The Sylow 2-subgroup of Sym(4) found first; its unique central
  // involution is the product of two transpositions fixed by conjugation.
  const auto d8 = find_sylow(named_group("Sym(4)"), 2);
  const auto z = frattini_center_element(d8, 2);
  for (const auto& x : d8.elements()) EXPECT_EQ(z.conjugate_by(x), z);
  EXPECT_EQ(z.fixed_point_count(), 0u);
}

TEST(Cores, Examples) {
  const auto s3 = named_group("Sym(3)");
  EXPECT_EQ(o_pprime_residual(s3, 3).order(), 3);
  EXPECT_EQ(o_pprime_residual(s3, 2).order(), 6);
  const PermGroup c4(4, {cyc("(0 1 2 3)", 4)});
  EXPECT_EQ(o_pprime_residual(c4, 2).order(), 4);

  const auto d6d6 = named_group("Product(D6,D6)");
  const auto core = p_prime_core(d6d6, 2);
  EXPECT_EQ(core.order(), 9);
  // Oracle: the 9 elements of odd order form the translation subgroup.
  std::size_t odd = 0;
  for (const auto& x : d6d6.elements()) odd += x.order() % 2 == 1;
  EXPECT_EQ(odd, 9u);
  for (const auto& x : core.elements()) EXPECT_EQ(x.order() % 2, 1u);

  EXPECT_EQ(p_core(named_group("AGammaL(1,8)"), 3).order(), 1);
  EXPECT_TRUE(is_Opp(c4, 2));
  EXPECT_TRUE(is_Opp(named_group("Sym(3)"), 2));
  EXPECT_FALSE(is_Opp(named_group("Sym(3)"), 3));
  EXPECT_FALSE(is_Opp(named_group("Sym(4)"), 3));
}

TEST(Solvable, ZooAndSymmetricGroups) {
  for (const auto& name : zoo_names()) EXPECT_TRUE(is_solvable(named_group(name))) << name;
  EXPECT_FALSE(is_solvable(named_group("Sym(5)")));
  EXPECT_EQ(derived_subgroup(named_group("Sym(4)")).order(), 12);
}

TEST(Conjugacy, ClassSizesSumToOrder) {
  for (const char* name : {"Sym(4)", "AGL(1,5)", "AGammaL(1,8)"}) {
    const auto g = named_group(name);
    std::size_t total = 0;
    for (const auto& cls : conjugacy_classes(g)) {
      total += cls.size();
      EXPECT_EQ(g.order() % cls.size(), 0);
    }
    EXPECT_EQ(total, g.order());
  }
  EXPECT_EQ(conjugacy_classes(named_group("Sym(4)")).size(), 5u);
}
