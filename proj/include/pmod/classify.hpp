#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmod/point_set.hpp"
#include "pmod/zoo.hpp"

namespace pmod {

struct ConcealedResult {
  bool concealed = false;
  /// Least subset (numeric order) stabilized by no Sylow p-subgroup.
  std::optional<PointSet> uncovered;
  std::uint64_t sylow_count = 0;
  std::uint64_t covered_subsets = 0;
};

/// Whether every subset is a union of P-orbits for some Sylow p-subgroup P.
/// Builds a 2^n coverage map from the orbit partitions of all Sylow
/// p-subgroups. Needs n <= 24 and p | |G|.
ConcealedResult is_p_concealed(const PermGroup& g, std::uint64_t p, std::size_t max_degree = 24);

enum class Strategy { Exhaustive, Constructive };
enum class Verdict { Moderate, Extreme };

const char* to_string(Strategy s);
const char* to_string(Verdict v);

struct ClassifyOptions {
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  std::size_t exhaustive_max_degree = 22;
};

struct ModerationReport {
  std::uint64_t p = 0;
  std::size_t degree = 0;
  Verdict verdict = Verdict::Extreme;
  std::optional<PointSet> witness;
  std::uint64_t witness_p_part = 0;
  std::uint64_t group_p_part = 0;
  /// Set for EXTREME verdicts when the concealed test could run.
  std::optional<bool> concealed;
  Strategy strategy = Strategy::Exhaustive;
  /// Which search stage settled the verdict (constructor name, "random",
  /// "exhaustive", "degenerate").
  std::string stage;
  /// True when all 2^n subsets were examined.
  bool exhaustive = false;
  std::string note;

  friend bool operator==(const ModerationReport&, const ModerationReport&) = default;
};

/// Decides p-moderation.
///
/// Exhaustive: scans the subset census and returns the least witness in
/// numeric order (n <= options.exhaustive_max_degree, else ResourceLimit).
/// Constructive: tries witness_candidates, then `trials` seeded random
/// subsets, then the exhaustive scan when the degree allows it.
/// When |G|_p = p no subset can be a witness and EXTREME is returned
/// without searching. Throws InvalidArgument when p does not divide |G|.
ModerationReport classify_moderation(const BuiltGroup& g, std::uint64_t p, Strategy strategy,
                                     const ClassifyOptions& options = {});
ModerationReport classify_moderation(const PermGroup& g, std::uint64_t p, Strategy strategy,
                                     const ClassifyOptions& options = {});

/// Subset drawn for trial `trial`: each point included on one bit of
/// std::mt19937_64 seeded with seed + trial.
PointSet random_subset(std::size_t degree, std::uint64_t seed, std::uint64_t trial);

}  // namespace pmod
