#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace pmod {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Measured values; deterministic for fixed options.
  std::string detail;
  double seconds = 0.0;
  /// Upper runtime bound for the criterion, 0 when none applies.
  double time_limit = 0.0;
};

struct VerificationOptions {
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  std::size_t property_cases = 100;
};

/// Runs the seven reproduction checks in order. Exceptions inside a check
/// are caught and recorded as a failure.
std::vector<CriterionResult> run_verification_suite(const VerificationOptions& options = {});

/// Payload without timings, so that two runs can be compared verbatim.
nlohmann::json verification_payload(const std::vector<CriterionResult>& results);

}  // namespace pmod
