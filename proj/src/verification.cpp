#include "pmod/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "pmod/classify.hpp"
#include "pmod/counting.hpp"
#include "pmod/errors.hpp"
#include "pmod/stabilizer.hpp"
#include "pmod/sylow.hpp"
#include "pmod/witness.hpp"
#include "pmod/zoo.hpp"

namespace pmod {

namespace {

/// Collects check outcomes; the first failure is kept in the detail text.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
    passed_ = passed_ && ok;
  }
  void note(const std::string& s) {
    if (!out_.str().empty()) out_ << "; ";
    out_ << s;
  }
  bool passed() const { return passed_; }
  std::string detail() const {
    if (passed_) return out_.str();
    return "FAILED: " + failure_ + (out_.str().empty() ? "" : " | " + out_.str());
  }

 private:
  bool passed_ = true;
  std::string failure_;
  std::ostringstream out_;
};

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    primes.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::string join_sizes(std::vector<std::size_t> sizes) {
  std::sort(sizes.begin(), sizes.end());
  std::string s = "{";
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
  return s + "}";
}

std::vector<std::size_t> orbit_sizes(const PermGroup& g) {
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits(g)) sizes.push_back(o.size());
  return sizes;
}

/// Re-derives the stabilizer p-part by chain backtrack, independent of the
/// census that produced the witness.
bool witness_verifies(const PermGroup& g, const ModerationReport& r) {
  if (r.verdict != Verdict::Moderate || !r.witness) return false;
  const auto stab = setwise_stabilizer_backtrack(g, *r.witness);
  const std::uint64_t part = p_part(stab.order_u64(), r.p);
  return part == r.witness_p_part && part > 1 && part < p_part(g.order_u64(), r.p);
}

/// Random subgroup of Sym(n): one or two generators, each a random
/// permutation of a random subset of the points.
PermGroup random_group(std::mt19937_64& rng, std::size_t min_degree, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(min_degree, max_degree);
  const std::size_t n = deg(rng);
  const std::size_t count = 1 + rng() % 2;
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Point> support;
    for (Point x = 0; x < n; ++x)
      if (rng() % 4 != 0) support.push_back(x);
    std::vector<Point> shuffled = support;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<Point> img(n);
    for (Point x = 0; x < n; ++x) img[x] = x;
    for (std::size_t i = 0; i < support.size(); ++i) img[support[i]] = shuffled[i];
    gens.emplace_back(img);
  }
  return PermGroup(n, gens);
}

Permutation random_element(const PermGroup& g, std::mt19937_64& rng) {
  const auto& els = g.elements();
  return els[rng() % els.size()];
}

PointSet random_points(std::size_t n, std::mt19937_64& rng) {
  PointSet s(n);
  for (Point x = 0; x < n; ++x)
    if (rng() & 1u) s.insert(x);
  return s;
}

void prop11_positives(Checker& c) {
  for (auto [name, p] : {std::pair<const char*, std::uint64_t>{"D6", 2}, {"D10", 2}, {"AGammaL(1,8)", 3}}) {
    const auto g = named_group(name);
    const auto r = is_p_concealed(g, p);
    const std::uint64_t total = std::uint64_t{1} << g.degree();
    c.expect(r.concealed && r.covered_subsets == total, std::string(name) + " not concealed");
    c.note(std::string(name) + "@" + std::to_string(p) + " order " + g.order().str() + " covered " +
           std::to_string(r.covered_subsets) + "/" + std::to_string(total) + " by " + std::to_string(r.sylow_count) +
           " Sylows");
  }
  c.expect(named_group("AGammaL(1,8)").order() == 168, "|J| != 168");
}

void prop11_negative(Checker& c) {
  const auto g = named_group("AGL(1,5)");
  const auto r = is_p_concealed(g, 2);
  c.expect(!r.concealed && r.uncovered.has_value(), "AGL(1,5) reported 2-concealed");
  if (!r.uncovered) return;
  // No Sylow 2-subgroup may stabilize the reported subset.
  const auto sylows = all_sylows(g, 2);
  bool any = false;
  for (const auto& s : sylows.conjugates)
    any = any || std::all_of(s.generators().begin(), s.generators().end(),
                             [&](const Permutation& x) { return r.uncovered->is_stabilized_by(x); });
  c.expect(!any, "uncovered subset is stabilized by a Sylow 2-subgroup");
  c.note("AGL(1,5)@2 uncovered " + r.uncovered->to_string() + ", covered " + std::to_string(r.covered_subsets) +
         "/32 by " + std::to_string(sylows.count) + " Sylows");
}

void product_witness(Checker& c) {
  const auto g = build_named("Product(D6,D6)");
  const auto delta = product_diagonal_witness(3, 3);
  const auto by_filter = setwise_stabilizer(g.group, delta);
  const auto by_backtrack = setwise_stabilizer_backtrack(g.group, delta);
  c.expect(delta == PointSet(9, {0, 4}), "diagonal witness is not {(0,0),(1,1)}");
  c.expect(by_filter.order() == 2 && by_backtrack.order() == 2, "stabilizer order != 2");
  const auto r = classify_moderation(g, 2, Strategy::Constructive);
  c.expect(r.verdict == Verdict::Moderate && r.witness_p_part == 2 && r.group_p_part == 4,
           "constructive classify of D6xD6 is not MODERATE 2/4");
  c.expect(witness_verifies(g.group, r), "constructive witness fails re-verification");
  const auto ex = classify_moderation(g, 2, Strategy::Exhaustive);
  c.expect(ex.verdict == Verdict::Moderate && witness_verifies(g.group, ex), "exhaustive classify disagrees");
  c.note("|Stab{(0,0),(1,1)}| = " + by_filter.order().str() + " (filter), " + by_backtrack.order().str() +
         " (backtrack); classify " + to_string(r.verdict) + " witness " + r.witness->to_string() + " stab 2-part " +
         std::to_string(r.witness_p_part) + " |G|_2 " + std::to_string(r.group_p_part));
}

void jxj_counting(Checker& c, const VerificationOptions& o) {
  const auto j = build_named("AGammaL(1,8)");
  const auto sj = all_sylows(j.group, 3);
  c.expect(sj.count == 28, "n_3(J) != 28");
  bool all_1133 = true;
  for (const auto& s : sj.conjugates) all_1133 = all_1133 && join_sizes(orbit_sizes(s)) == "{1,1,3,3}";
  c.expect(all_1133, "a Sylow 3-subgroup of J has orbit sizes other than {1,1,3,3}");
  c.note("n_3(J) = " + std::to_string(sj.count) + ", orbit sizes " + join_sizes(orbit_sizes(sj.representative)) +
         " on all " + std::to_string(sj.conjugates.size()) + " conjugates");

  const auto jj = build_named("Product(AGammaL(1,8),AGammaL(1,8))");
  const auto sjj = all_sylows(jj.group, 3);
  c.expect(sjj.count == 784, "n_3(JxJ) != 784");
  const auto sylow_orbits = orbits(sjj.representative).size();
  const BigInt fixed_by_sylow = subsets_fixed_count(sjj.representative.generators(), 64);
  c.expect(sylow_orbits == 16 && fixed_by_sylow == BigInt(1) << 16, "Sylow 3 of JxJ does not have 16 orbits");

  // t: the field automorphism on the first coordinate only.
  std::vector<Point> img(64);
  for (Point a = 0; a < 8; ++a)
    for (Point b = 0; b < 8; ++b) img[a * 8 + b] = j.affine->field().frobenius(a) * 8 + b;
  const Permutation t(img);
  bool second_trivial = true;
  for (Point x = 0; x < 64; ++x) second_trivial = second_trivial && t[x] % 8 == x % 8;
  const auto t_orbits = orbits(std::span<const Permutation>(&t, 1), 64).size();
  c.expect(t.order() == 3 && second_trivial && jj.group.contains(t), "t is not an order-3 element of JxJ");
  c.expect(t_orbits == 32 && subsets_fixed_count(t) == BigInt(1) << 32, "t does not have 32 orbits");

  const auto bound = sylow_cover_bound(jj.group, 3);
  c.expect(bound.exact == BigInt(784) * (BigInt(1) << 16) && bound.exact < (BigInt(1) << 32),
           "784 * 2^16 < 2^32 fails");
  c.note("n_3(JxJ) = " + std::to_string(sjj.count) + ", Sylow orbits " + std::to_string(sylow_orbits) +
         " (2^16 fixed subsets), t orbits " + std::to_string(t_orbits) + " (2^32 fixed subsets), " +
         bound.exact.str() + " < " + (BigInt(1) << 32).str());

  std::uint64_t trial = 0;
  const auto delta = randomized_witness_from_z(jj.group, 3, t, o.trials, o.seed, &trial);
  c.expect(delta.has_value(), "randomized search found no witness");
  if (!delta) return;
  const auto& els = jj.group.elements();
  std::uint64_t stab = 0;
  for (const auto& x : els) stab += delta->is_stabilized_by(x);
  c.expect(els.size() == 28224, "JxJ does not have 28224 elements");
  c.expect(p_part(stab, 3) == 3, "brute-force stabilizer 3-part != 3");
  c.note("random witness at trial " + std::to_string(trial) + " of size " + std::to_string(delta->size()) +
         ", |Stab| = " + std::to_string(stab) + " over " + std::to_string(els.size()) + " elements, 3-part " +
         std::to_string(p_part(stab, 3)));
}

void counting_certificates(Checker& c) {
  const auto c4 = named_group("C4");
  const auto cert = counting_certificate(c4, 2);
  const auto census = classify_moderation(c4, 2, Strategy::Exhaustive);
  c.expect(cert.verdict && census.verdict == Verdict::Moderate, "C4 certificate or census wrong");
  c.note("C4@2 " + cert.lhs_power.str() + " < 2^" + std::to_string(cert.rhs_exponent) + " -> " +
         (cert.verdict ? "true" : "false") + ", census " + to_string(census.verdict));

  const auto s4 = named_group("Sym(4)");
  const auto cs = counting_certificate(s4, 2);
  const auto cs_census = classify_moderation(s4, 2, Strategy::Exhaustive);
  c.expect(!cs.verdict && cs.lhs_power == 81 && cs.rhs_exponent == 4, "Sym(4) certificate is not 81 >= 16");
  c.expect(cs_census.verdict == Verdict::Moderate, "Sym(4) census not MODERATE");
  c.note("Sym(4)@2 " + cs.lhs_power.str() + " >= 2^" + std::to_string(cs.rhs_exponent) + " -> " +
         (cs.verdict ? "true" : "false") + ", census " + to_string(cs_census.verdict));

  bool inapplicable = false;
  try {
    counting_certificate(named_group("Product(AGammaL(1,8),AGammaL(1,8))"), 3);
  } catch (const Inapplicable&) {
    inapplicable = true;
  }
  c.expect(inapplicable, "JxJ certificate did not report an elementary abelian Sylow");
  c.note(std::string("JxJ@3 ") + (inapplicable ? "inapplicable" : "applicable"));
}

void zoo_spot_suite(Checker& c) {
  std::vector<std::string> seen;
  for (const auto& name : zoo_names()) {
    const auto g = build_named(name);
    if (g.group.degree() > 16 || !is_transitive(g.group) || !is_primitive(g.group) || !is_solvable(g.group)) continue;
    for (std::uint64_t p : prime_divisors(g.group.order_u64())) {
      if (g.group.order_u64() % (p * p) != 0) continue;
      const auto ex = classify_moderation(g, p, Strategy::Exhaustive);
      const auto con = classify_moderation(g, p, Strategy::Constructive);
      const std::string tag = name + "@" + std::to_string(p);
      seen.push_back(tag);
      c.expect(ex.verdict == Verdict::Moderate, tag + " exhaustive EXTREME");
      c.expect(con.verdict == ex.verdict, tag + " strategies disagree");
      c.expect(witness_verifies(g.group, ex) && witness_verifies(g.group, con), tag + " witness fails");
      c.note(tag + " " + to_string(ex.verdict) + " " + (ex.witness ? ex.witness->to_string() : "-") + "/" +
             (con.witness ? con.witness->to_string() : "-") + " via " + con.stage);
    }
  }
  for (const char* required : {"Sym(4)@2", "AGL(2,3)@2", "AGL(2,3)@3", "AGammaL(1,9)@2"})
    c.expect(std::find(seen.begin(), seen.end(), required) != seen.end(), std::string("missing case ") + required);
}

void property_suites(Checker& c, const VerificationOptions& o) {
  std::mt19937_64 rng(o.seed);

  // Subsets fixed by a subgroup, exhaustively over all masks.
  std::size_t fixed_cases = 0;
  for (std::size_t i = 0; i < o.property_cases; ++i) {
    const auto h = random_group(rng, 1, 12);
    std::uint64_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << h.degree()); ++m)
      count += std::all_of(h.generators().begin(), h.generators().end(),
                           [&](const Permutation& x) { return image_mask(x, m) == m; });
    c.expect(BigInt(count) == subsets_fixed_count(h.generators(), h.degree()), "fixed-subset count mismatch");
    ++fixed_cases;
  }
  c.note("fixed subsets = 2^orbits: " + std::to_string(fixed_cases) + " groups");

  // Sylow axioms on every zoo group and prime.
  std::size_t sylow_cases = 0;
  std::vector<BuiltGroup> zoo;
  for (const auto& name : zoo_names()) zoo.push_back(build_named(name));
  for (const auto& g : zoo) {
    for (std::uint64_t p : prime_divisors(g.group.order_u64())) {
      const auto s = all_sylows(g.group, p);
      const auto n = normalizer(g.group, s.representative);
      c.expect(s.count % p == 1 && s.representative.order_u64() == p_part(g.group.order_u64(), p) &&
                   is_p_group(s.representative, p) && s.count * n.order_u64() == g.group.order_u64(),
               "Sylow axioms fail for " + g.name + " at " + std::to_string(p));
      ++sylow_cases;
    }
  }
  c.note("Sylow axioms: " + std::to_string(sylow_cases) + " (group, p) pairs");

  // Stab(D^g) = Stab(D)^g.
  std::size_t cov_cases = 0;
  while (cov_cases < o.property_cases) {
    const auto& g = zoo[rng() % zoo.size()].group;
    if (g.degree() > 16) continue;
    const auto d = random_points(g.degree(), rng);
    const auto x = random_element(g, rng);
    const auto stab = setwise_stabilizer(g, d);
    const auto moved = setwise_stabilizer(g, d.image(x));
    bool ok = stab.order() == moved.order();
    for (const auto& s : stab.generators()) ok = ok && moved.contains(s.conjugate_by(x));
    c.expect(ok, "conjugation covariance fails");
    ++cov_cases;
  }
  c.note("stabilizer covariance: " + std::to_string(cov_cases) + " cases");

  // orbit_size_floor_check on every Frattini-center element of every Sylow.
  std::size_t floor_cases = 0;
  for (const auto& g : zoo) {
    for (std::uint64_t p : prime_divisors(g.group.order_u64())) {
      const auto s = all_sylows(g.group, p);
      for (const auto& sylow : s.conjugates) {
        if (is_elementary_abelian(sylow, p)) continue;
        const auto phi = frattini_subgroup(sylow, p);
        const auto z_p = center(sylow);
        for (const auto& z : phi.elements()) {
          if (z.order() != p || !z_p.contains(z)) continue;
          c.expect(orbit_size_floor_check(sylow, p, z), "orbit floor fails for " + g.name);
          ++floor_cases;
        }
      }
    }
  }
  c.note("orbit-size floor: " + std::to_string(floor_cases) + " (P, z) pairs");

  // Concealed implies EXTREME; every witness re-verifies.
  std::size_t concealed_cases = 0, concealed_hits = 0, witnesses = 0;
  auto check_group = [&](const PermGroup& g, std::uint64_t p) {
    const auto conc = is_p_concealed(g, p);
    const auto r = classify_moderation(g, p, Strategy::Exhaustive);
    ++concealed_cases;
    concealed_hits += conc.concealed;
    c.expect(!conc.concealed || r.verdict == Verdict::Extreme, "concealed group classified MODERATE");
    if (r.verdict == Verdict::Moderate) {
      c.expect(witness_verifies(g, r), "witness fails re-verification");
      ++witnesses;
    }
  };
  for (const auto& g : zoo)
    if (g.group.degree() <= 16)
      for (std::uint64_t p : prime_divisors(g.group.order_u64())) check_group(g.group, p);
  for (std::size_t i = 0; i < o.property_cases;) {
    const auto g = random_group(rng, 2, 8);
    if (g.order() == 1) continue;
    const auto primes = prime_divisors(g.order_u64());
    check_group(g, primes[rng() % primes.size()]);
    ++i;
  }
  c.note("concealed => EXTREME: " + std::to_string(concealed_cases) + " cases (" + std::to_string(concealed_hits) +
         " concealed), " + std::to_string(witnesses) + " witnesses re-verified");
}

}  // namespace

std::vector<CriterionResult> run_verification_suite(const VerificationOptions& options) {
  struct Entry {
    int id;
    const char* name;
    double limit;
    std::function<void(Checker&)> body;
  };
  const std::vector<Entry> entries = {
      {1, "concealed positives: D6@2, D10@2, AGammaL(1,8)@3", 10.0, prop11_positives},
      {2, "concealed negative: AGL(1,5)@2", 0.0, prop11_negative},
      {3, "D6xD6 diagonal witness", 0.0, product_witness},
      {4, "JxJ Sylow counting and random witness", 300.0, [&](Checker& c) { jxj_counting(c, options); }},
      {5, "counting certificates: C4, Sym(4), JxJ", 0.0, counting_certificates},
      {6, "primitive solvable zoo with p^2 | |G| is MODERATE", 0.0, zoo_spot_suite},
      {7, "property suites", 0.0, [&](Checker& c) { property_suites(c, options); }},
  };
  std::vector<CriterionResult> results;
  for (const auto& e : entries) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.body(checker);
    } catch (const std::exception& ex) {
      checker.expect(false, std::string("exception: ") + ex.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool passed = checker.passed();
    std::string detail = checker.detail();
    if (e.limit > 0 && seconds >= e.limit) {
      passed = false;
      detail = "FAILED: over time limit | " + detail;
    }
    results.push_back({e.id, e.name, passed, detail, seconds, e.limit});
  }
  return results;
}

nlohmann::json verification_payload(const std::vector<CriterionResult>& results) {
  nlohmann::json criteria = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  return {{"criteria", criteria}, {"all_passed", all}};
}

}  // namespace pmod
