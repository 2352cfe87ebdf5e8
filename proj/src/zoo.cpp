#include "pmod/zoo.hpp"

#include <regex>

#include "pmod/errors.hpp"

namespace pmod {

namespace {

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    std::uint32_t k = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) break;
    return {p, k};
  }
  throw InvalidArgument(std::to_string(q) + " is not a prime power");
}

Matrix identity_matrix(std::uint32_t dim) {
  Matrix m(dim, std::vector<FieldElem>(dim, 0));
  for (std::uint32_t i = 0; i < dim; ++i) m[i][i] = 1;
  return m;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits "A,B" at the single top-level comma.
std::pair<std::string, std::string> split_pair(std::string_view inner) {
  int depth = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    if (inner[i] == ')') --depth;
    if (inner[i] == ',' && depth == 0) return {trim(inner.substr(0, i)), trim(inner.substr(i + 1))};
  }
  throw InvalidArgument("Product(...) needs two comma-separated factors");
}

Permutation cycle_on(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return Permutation(std::move(img));
}

BuiltGroup from_affine(std::string name, const AffineSpec& spec, Limits limits) {
  AffineGroup affine = AffineGroup::from_spec(spec, limits);
  PermGroup group = affine.group();
  return BuiltGroup{std::move(name), std::move(group), std::move(affine), std::nullopt};
}

}  // namespace

AffineSpec dihedral_spec(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw InvalidArgument("Dihedral(2p) needs an odd prime p");
  FiniteField f(p, 1);
  return AffineSpec{f, 1, {SemilinearMap{{{f.neg(1)}}, 0, {}}}};
}

AffineSpec agl_spec(std::uint32_t dim, std::uint32_t q) {
  auto [p, k] = prime_power(q);
  FiniteField f(p, k);
  AffineSpec spec{f, dim, {}};
  if (q > 2) {
    Matrix d = identity_matrix(dim);
    d[0][0] = f.primitive_element();
    spec.generators.push_back({d, 0, {}});
  }
  for (std::uint32_t i = 0; i < dim; ++i) {
    for (std::uint32_t j = 0; j < dim; ++j) {
      if (i == j) continue;
      FieldElem basis = 1;
      for (std::uint32_t t = 0; t < k; ++t, basis *= p) {
        Matrix m = identity_matrix(dim);
        m[i][j] = basis;
        spec.generators.push_back({m, 0, {}});
      }
    }
  }
  return spec;
}

AffineSpec agammal_spec(std::uint32_t dim, std::uint32_t q) {
  AffineSpec spec = agl_spec(dim, q);
  if (spec.field.extension_degree() > 1) spec.generators.push_back({identity_matrix(dim), 1, {}});
  return spec;
}

BuiltGroup build_product(const BuiltGroup& first, const BuiltGroup& second) {
  PermGroup group = product_action(first.group, second.group);
  std::optional<AffineGroup> affine;
  if (first.affine && second.affine &&
      first.affine->field().size() == second.affine->field().size() &&
      first.affine->field().modulus() == second.affine->field().modulus()) {
    affine.emplace(first.affine->field(), first.affine->dim() + second.affine->dim(), group);
  }
  return BuiltGroup{"Product(" + first.name + "," + second.name + ")", std::move(group), std::move(affine),
                    std::make_pair(first.group.degree(), second.group.degree())};
}

BuiltGroup build_named(std::string_view raw_name, Limits limits) {
  const std::string name = trim(raw_name);
  std::smatch m;
  static const std::regex product_re(R"(Product\((.*)\))");
  static const std::regex dihedral_re(R"((?:D|Dihedral\()(\d+)\)?)");
  static const std::regex agl_re(R"(AGL\((\d+),\s*(\d+)\))");
  static const std::regex agammal_re(R"(AGammaL\((\d+),\s*(\d+)\))");
  static const std::regex sym_re(R"(Sym\((\d+)\))");
  static const std::regex cyclic_re(R"((?:C|Cyclic\()(\d+)\)?)");

  if (std::regex_match(name, m, product_re)) {
    auto [a, b] = split_pair(m[1].str());
    return build_product(build_named(a, limits), build_named(b, limits));
  }
  if (std::regex_match(name, m, dihedral_re)) {
    const auto order = static_cast<std::uint32_t>(std::stoul(m[1].str()));
    if (order % 2 != 0) throw InvalidArgument("dihedral order must be even: " + name);
    return from_affine("D" + std::to_string(order), dihedral_spec(order / 2), limits);
  }
  if (std::regex_match(name, m, agl_re)) {
    const auto d = static_cast<std::uint32_t>(std::stoul(m[1].str()));
    const auto q = static_cast<std::uint32_t>(std::stoul(m[2].str()));
    return from_affine(name, agl_spec(d, q), limits);
  }
  if (std::regex_match(name, m, agammal_re)) {
    const auto d = static_cast<std::uint32_t>(std::stoul(m[1].str()));
    const auto q = static_cast<std::uint32_t>(std::stoul(m[2].str()));
    return from_affine(name, agammal_spec(d, q), limits);
  }
  if (std::regex_match(name, m, sym_re)) {
    const auto n = std::stoul(m[1].str());
    if (n < 1 || n > 10) throw InvalidArgument("Sym(n) supported for 1 <= n <= 10");
    std::vector<Permutation> gens;
    if (n >= 2) {
      gens.push_back(cycle_on(n));
      gens.push_back(parse_cycles("(0 1)", n));
    }
    PermGroup group(n, std::move(gens), limits);
    std::optional<AffineGroup> affine;
    // Sym(n) is the full affine group of GF(2)^2, GF(3) and GF(2) for n = 4, 3, 2.
    if (n == 4) affine.emplace(FiniteField(2, 1), 2, group);
    if (n == 3 || n == 2) affine.emplace(FiniteField(static_cast<std::uint32_t>(n), 1), 1, group);
    return BuiltGroup{name, std::move(group), std::move(affine), std::nullopt};
  }
  if (std::regex_match(name, m, cyclic_re)) {
    const auto n = std::stoul(m[1].str());
    if (n < 1) throw InvalidArgument("Cyclic(n) needs n >= 1");
    PermGroup group(n, {cycle_on(n)}, limits);
    std::optional<AffineGroup> affine;
    if (is_prime(n) && n <= FiniteField::kMaxOrder)
      affine.emplace(FiniteField(static_cast<std::uint32_t>(n), 1), 1, group);
    return BuiltGroup{"C" + std::to_string(n), std::move(group), std::move(affine), std::nullopt};
  }
  throw InvalidArgument("unknown group name: " + name);
}

PermGroup named_group(std::string_view name, Limits limits) { return build_named(name, limits).group; }

const std::vector<std::string>& zoo_names() {
  static const std::vector<std::string> names = {
      "D6",           "D10",          "C4",          "Sym(4)",        "AGL(1,3)",
      "AGL(1,4)",     "AGL(1,5)",     "AGL(1,7)",    "AGL(1,8)",      "AGL(1,9)",
      "AGL(1,11)",    "AGL(1,13)",    "AGL(1,16)",   "AGammaL(1,8)",  "AGammaL(1,9)",
      "AGL(2,2)",     "AGL(2,3)",     "Product(D6,D6)", "Product(D10,D10)", "Product(C4,D6)",
  };
  return names;
}

}  // namespace pmod
