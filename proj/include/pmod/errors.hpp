#pragma once

#include <stdexcept>
#include <string>

namespace pmod {

/// Malformed input: bad cycle text, mismatched degrees, unknown group names.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured bound (enumeration size, degree, subset scan width) was hit.
/// Raised instead of returning a possibly wrong answer.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested construction or criterion does not apply to this input
/// (e.g. an elementary abelian Sylow subgroup for the counting certificate).
class Inapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pmod
