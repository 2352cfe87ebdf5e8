#pragma once

#include <cstdint>
#include <vector>

namespace pmod {

/// Field elements are indices 0..q-1. Index i encodes the polynomial whose
/// coefficient of x^j is the j-th base-p digit of i, so 0 is zero, 1 is one
/// and p^j is x^j.
using FieldElem = std::uint32_t;

/// GF(p^k) for q = p^k <= 64, with full addition and multiplication tables.
///
/// The reducing polynomial comes from a fixed table so element numbering is
/// reproducible:
///
///   q = 4   x^2 + x + 1        q = 9   x^2 + 1
///   q = 8   x^3 + x + 1        q = 27  x^3 + 2x + 1
///   q = 16  x^4 + x + 1        q = 25  x^2 + 2
///   q = 32  x^5 + x^2 + 1      q = 49  x^2 + 1
///   q = 64  x^6 + x + 1        q = p   x
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 64;

  FiniteField(std::uint32_t p, std::uint32_t k);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t extension_degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return q_; }

  /// Coefficients of the monic modulus, constant term first.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElem add(FieldElem a, FieldElem b) const { return add_[a * q_ + b]; }
  FieldElem mul(FieldElem a, FieldElem b) const { return mul_[a * q_ + b]; }
  FieldElem neg(FieldElem a) const { return neg_[a]; }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  /// Throws InvalidArgument for zero.
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const;

  /// a^(p^e), the e-th power of the Frobenius automorphism.
  FieldElem frobenius(FieldElem a, std::uint32_t e = 1) const;

  /// Image of the integer c in the prime subfield.
  FieldElem from_int(std::int64_t c) const;

  /// Least index generating the multiplicative group.
  FieldElem primitive_element() const noexcept { return primitive_; }

  std::uint64_t multiplicative_order(FieldElem a) const;

 private:
  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
  FieldElem primitive_ = 1;
};

/// Throws InvalidArgument for non-prime p or q outside the table.
FiniteField build_field(std::uint32_t p, std::uint32_t k);

bool is_prime(std::uint64_t n);

}  // namespace pmod
