#include "pmod/finite_field.hpp"

#include <map>
#include <string>

#include "pmod/errors.hpp"

namespace pmod {

namespace {

const std::map<std::uint32_t, std::vector<std::uint32_t>>& modulus_table() {
  static const std::map<std::uint32_t, std::vector<std::uint32_t>> table = {
      {4, {1, 1, 1}},
      {8, {1, 1, 0, 1}},
      {16, {1, 1, 0, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}},
      {64, {1, 1, 0, 0, 0, 0, 1}},
      {9, {1, 0, 1}},
      {27, {1, 2, 0, 1}},
      {25, {2, 0, 1}},
      {49, {1, 0, 1}},
  };
  return table;
}

std::vector<std::uint32_t> digits(std::uint32_t value, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> d(k);
  for (std::uint32_t j = 0; j < k; ++j) {
    d[j] = value % p;
    value /= p;
  }
  return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t value = 0;
  for (std::size_t j = d.size(); j-- > 0;) value = value * p + d[j];
  return value;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k), q_(1) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw InvalidArgument("extension degree must be positive");
  for (std::uint32_t i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > kMaxOrder) throw InvalidArgument("field order above " + std::to_string(kMaxOrder));
  }
  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    auto it = modulus_table().find(q_);
    if (it == modulus_table().end()) throw InvalidArgument("no modulus for GF(" + std::to_string(q_) + ")");
    modulus_ = it->second;
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    auto da = digits(a, p, k);
    std::vector<std::uint32_t> dn(k);
    for (std::uint32_t j = 0; j < k; ++j) dn[j] = (p - da[j]) % p;
    neg_[a] = static_cast<std::uint8_t>(undigits(dn, p));
    for (std::uint32_t b = 0; b < q_; ++b) {
      auto db = digits(b, p, k);
      std::vector<std::uint32_t> sum(k);
      for (std::uint32_t j = 0; j < k; ++j) sum[j] = (da[j] + db[j]) % p;
      add_[a * q_ + b] = static_cast<std::uint8_t>(undigits(sum, p));

      // schoolbook product, then reduce by the monic modulus from the top
      std::vector<std::uint32_t> prod(2 * k - 1, 0);
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (std::size_t deg = prod.size(); deg-- > k;) {
        const std::uint32_t c = prod[deg];
        if (c == 0) continue;
        for (std::uint32_t j = 0; j <= k; ++j) {
          auto& slot = prod[deg - k + j];
          slot = (slot + (p - c) * modulus_[j]) % p;
        }
      }
      prod.resize(k);
      mul_[a * q_ + b] = static_cast<std::uint8_t>(undigits(prod, p));
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a) {
    for (std::uint32_t b = 1; b < q_; ++b) {
      if (mul(a, b) == 1) {
        inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
    if (inv_[a] == 0) throw std::logic_error("modulus table entry is reducible");
  }
  for (FieldElem a = 1; a < q_; ++a) {
    if (multiplicative_order(a) == q_ - 1) {
      primitive_ = a;
      break;
    }
  }
}

FieldElem FiniteField::inv(FieldElem a) const {
  if (a == 0 || a >= q_) throw InvalidArgument("zero has no inverse");
  return inv_[a];
}

FieldElem FiniteField::pow(FieldElem a, std::uint64_t e) const {
  FieldElem result = 1, base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

FieldElem FiniteField::frobenius(FieldElem a, std::uint32_t e) const {
  for (std::uint32_t i = 0; i < e % k_; ++i) a = pow(a, p_);
  return a;
}

FieldElem FiniteField::from_int(std::int64_t c) const {
  const auto pp = static_cast<std::int64_t>(p_);
  return static_cast<FieldElem>(((c % pp) + pp) % pp);
}

std::uint64_t FiniteField::multiplicative_order(FieldElem a) const {
  if (a == 0) throw InvalidArgument("zero has no multiplicative order");
  std::uint64_t k = 1;
  for (FieldElem x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

FiniteField build_field(std::uint32_t p, std::uint32_t k) { return FiniteField(p, k); }

}  // namespace pmod
