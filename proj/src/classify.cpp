#include "pmod/classify.hpp"

#include <bit>
#include <random>

#include "pmod/errors.hpp"
#include "pmod/stabilizer.hpp"
#include "pmod/sylow.hpp"
#include "pmod/witness.hpp"

namespace pmod {

const char* to_string(Strategy s) { return s == Strategy::Exhaustive ? "exhaustive" : "constructive"; }
const char* to_string(Verdict v) { return v == Verdict::Moderate ? "MODERATE" : "EXTREME"; }

ConcealedResult is_p_concealed(const PermGroup& g, std::uint64_t p, std::size_t max_degree) {
  const std::size_t n = g.degree();
  if (n > max_degree || n > 30) throw ResourceLimit("concealed test limited to degree " + std::to_string(max_degree));
  if (g.order() % p != 0) throw InvalidArgument(std::to_string(p) + " does not divide the group order");

  SylowData sylows = all_sylows(g, p);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint64_t> covered((total + 63) / 64, 0);
  for (const auto& sylow : sylows.conjugates) {
    std::vector<std::uint64_t> orbit_masks;
    for (const auto& orbit : orbits(sylow)) {
      std::uint64_t m = 0;
      for (Point x : orbit) m |= std::uint64_t{1} << x;
      orbit_masks.push_back(m);
    }
    // Gray-code walk over all unions of orbits.
    std::uint64_t current = 0;
    covered[0] |= 1u;
    const std::uint64_t unions = std::uint64_t{1} << orbit_masks.size();
    for (std::uint64_t i = 1; i < unions; ++i) {
      current ^= orbit_masks[static_cast<std::size_t>(std::countr_zero(i))];
      covered[current / 64] |= std::uint64_t{1} << (current % 64);
    }
  }

  ConcealedResult result;
  result.sylow_count = sylows.count;
  for (std::uint64_t m = 0; m < total; ++m) {
    const bool hit = (covered[m / 64] >> (m % 64)) & 1u;
    result.covered_subsets += hit;
    if (!hit && !result.uncovered) result.uncovered = PointSet::from_mask(n, m);
  }
  result.concealed = !result.uncovered.has_value();
  return result;
}

PointSet random_subset(std::size_t degree, std::uint64_t seed, std::uint64_t trial) {
  std::mt19937_64 rng(seed + trial);
  PointSet s(degree);
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < degree; ++i) {
    if (i % 64 == 0) bits = rng();
    if ((bits >> (i % 64)) & 1u) s.insert(static_cast<Point>(i));
  }
  return s;
}

namespace {

void fill_concealed(ModerationReport& report, const PermGroup& g) {
  if (g.degree() > 24) return;
  report.concealed = is_p_concealed(g, report.p).concealed;
}

std::optional<ModerationReport> exhaustive_scan(const PermGroup& g, ModerationReport report,
                                                std::size_t max_degree) {
  SubsetCensus census(g, max_degree);
  report.exhaustive = true;
  report.stage = "exhaustive";
  for (std::uint64_t m = 0; m < census.subset_count(); ++m) {
    const std::uint64_t part = census.stab_p_part(m, report.p);
    if (part > 1 && part < report.group_p_part) {
      report.verdict = Verdict::Moderate;
      report.witness = PointSet::from_mask(g.degree(), m);
      report.witness_p_part = part;
      return report;
    }
  }
  return std::nullopt;
}

}  // namespace

ModerationReport classify_moderation(const BuiltGroup& built, std::uint64_t p, Strategy strategy,
                                     const ClassifyOptions& options) {
  const PermGroup& g = built.group;
  ModerationReport report;
  report.p = p;
  report.degree = g.degree();
  report.strategy = strategy;
  report.group_p_part = p_part(g.order_u64(), p);
  if (report.group_p_part == 1) throw InvalidArgument(std::to_string(p) + " does not divide the group order");

  if (report.group_p_part == p) {
    report.verdict = Verdict::Extreme;
    report.stage = "degenerate";
    report.note = "|G|_p = p: every stabilizer has p-part 1 or p";
    fill_concealed(report, g);
    return report;
  }

  if (strategy == Strategy::Exhaustive) {
    if (g.degree() > options.exhaustive_max_degree)
      throw ResourceLimit("exhaustive strategy limited to degree " + std::to_string(options.exhaustive_max_degree));
    if (auto found = exhaustive_scan(g, report, options.exhaustive_max_degree)) return *found;
    report.verdict = Verdict::Extreme;
    report.exhaustive = true;
    report.stage = "exhaustive";
    fill_concealed(report, g);
    return report;
  }

  auto accept = [&](const PointSet& s, const std::string& stage) {
    const std::uint64_t part = stab_p_part(g, s, p);
    if (part <= 1 || part >= report.group_p_part) return false;
    report.verdict = Verdict::Moderate;
    report.witness = s;
    report.witness_p_part = part;
    report.stage = stage;
    return true;
  };

  std::vector<std::string> skipped;
  for (const auto& c : witness_candidates(built, p, &skipped))
    if (accept(c.subset, c.stage)) return report;
  for (std::uint64_t trial = 0; trial < options.trials; ++trial)
    if (accept(random_subset(g.degree(), options.seed, trial), "random")) {
      report.note = "trial " + std::to_string(trial);
      return report;
    }
  if (g.degree() <= options.exhaustive_max_degree) {
    if (auto found = exhaustive_scan(g, report, options.exhaustive_max_degree)) return *found;
    report.exhaustive = true;
    report.stage = "exhaustive";
  } else {
    report.stage = "random";
    report.note = "no witness found; degree too large for an exhaustive scan, verdict unproven";
  }
  report.verdict = Verdict::Extreme;
  fill_concealed(report, g);
  return report;
}

ModerationReport classify_moderation(const PermGroup& g, std::uint64_t p, Strategy strategy,
                                     const ClassifyOptions& options) {
  return classify_moderation(BuiltGroup{"", g, std::nullopt, std::nullopt}, p, strategy, options);
}

}  // namespace pmod
