#include "pmod/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "pmod/errors.hpp"

namespace pmod {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidArgument("image array is not a bijection");
    seen[x] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

std::uint64_t Permutation::order() const {
  // lcm of cycle lengths
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

Permutation Permutation::pow(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  // x^(g^-1 h g): send g[x] to g[h[x]]
  if (g.degree() != degree()) throw InvalidArgument("degree mismatch in conjugation");
  Permutation out(degree());
  for (std::size_t x = 0; x < degree(); ++x) out.images_[g.images_[x]] = g.images_[images_[x]];
  return out;
}

std::size_t Permutation::fixed_point_count() const noexcept {
  std::size_t f = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) f += images_[i] == i;
  return f;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("degree mismatch in compose");
  Permutation out;
  out.images_.resize(a.degree());
  for (std::size_t x = 0; x < a.degree(); ++x) out.images_[x] = b.images_[a.images_[x]];
  return out;
}

std::uint64_t element_order(const Permutation& g) { return g.order(); }

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw InvalidArgument("malformed cycle text: expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw InvalidArgument("malformed cycle text: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InvalidArgument("malformed cycle text: unexpected '" + std::string(1, text[i]) + "'");
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value >= degree) throw InvalidArgument("point out of range for degree " + std::to_string(degree));
        ++i;
      }
      if (used[value]) throw InvalidArgument("point " + std::to_string(value) + " repeated");
      used[value] = true;
      cycle.push_back(static_cast<Point>(value));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += '(';
    for (Point x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      if (x != start) out += ' ';
      out += std::to_string(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace pmod
