#include "pmod/sylow.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "pmod/errors.hpp"
#include "pmod/finite_field.hpp"

namespace pmod {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
}

bool is_p_element(const Permutation& x, std::uint64_t p) {
  const std::uint64_t k = x.order();
  return k > 1 && is_p_power(k, p);
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> gens = a.generators();
  for (const auto& g : b.generators())
    if (!a.contains(g)) gens.push_back(g);
  return PermGroup(a.degree(), std::move(gens), a.limits());
}

}  // namespace

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  if (n == 0) throw InvalidArgument("p-part of zero");
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

BigInt p_part(const BigInt& n, std::uint64_t p) {
  require_prime(p);
  if (n <= 0) throw InvalidArgument("p-part of a non-positive integer");
  BigInt rest = n, part = 1;
  while (rest % p == 0) {
    rest /= p;
    part *= p;
  }
  return part;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_p_group(const PermGroup& g, std::uint64_t p) {
  require_prime(p);
  BigInt n = g.order();
  return p_part(n, p) == n;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

PermGroup find_sylow(const PermGroup& g, std::uint64_t p) {
  require_prime(p);
  const std::uint64_t target = p_part(g.order_u64(), p);
  if (target == 1) throw InvalidArgument(std::to_string(p) + " does not divide the group order");

  const auto& elements = g.elements();
  auto first = std::find_if(elements.begin(), elements.end(),
                            [&](const Permutation& x) { return is_p_element(x, p); });
  PermGroup sylow(g.degree(), {*first}, g.limits());
  while (sylow.order_u64() < target) {
    PermGroup norm = normalizer(g, sylow);
    auto next = std::find_if(elements.begin(), elements.end(), [&](const Permutation& x) {
      return is_p_element(x, p) && !sylow.contains(x) && norm.contains(x);
    });
    if (next == elements.end()) throw std::logic_error("normalizer holds no p-element outside P");
    std::vector<Permutation> gens = sylow.generators();
    gens.push_back(*next);
    sylow = PermGroup(g.degree(), std::move(gens), g.limits());
  }
  return sylow;
}

SylowData all_sylows(const PermGroup& g, std::uint64_t p, std::uint64_t max_count) {
  SylowData data{p, find_sylow(g, p), {}, 0, 0};
  PermGroup norm = normalizer(g, data.representative);
  data.normalizer_index = g.order_u64() / norm.order_u64();
  if (data.normalizer_index > max_count)
    throw ResourceLimit("number of Sylow subgroups exceeds bound " + std::to_string(max_count));

  std::unordered_set<Permutation, PermutationHash> covered;
  for (const auto& x : g.elements()) {
    if (covered.contains(x)) continue;
    for (const auto& n : norm.elements()) covered.insert(n * x);
    std::vector<Permutation> gens;
    for (const auto& h : data.representative.generators()) gens.push_back(h.conjugate_by(x));
    data.conjugates.emplace_back(g.degree(), std::move(gens), g.limits());
  }
  data.count = data.conjugates.size();
  return data;
}

bool is_elementary_abelian(const PermGroup& p_group, std::uint64_t p) {
  if (!is_p_group(p_group, p)) throw InvalidArgument("is_elementary_abelian needs a p-group");
  return is_abelian(p_group) && std::all_of(p_group.generators().begin(), p_group.generators().end(),
                                            [&](const Permutation& x) { return x.pow(p).is_identity(); });
}

PermGroup frattini_subgroup(const PermGroup& p_group, std::uint64_t p) {
  if (!is_p_group(p_group, p)) throw InvalidArgument("Frattini subgroup computed for p-groups only");
  const auto& elements = p_group.elements();
  std::unordered_set<Permutation, PermutationHash> gens;
  for (const auto& x : elements) {
    Permutation power = x.pow(static_cast<std::int64_t>(p));
    if (!power.is_identity()) gens.insert(std::move(power));
    for (const auto& y : elements) {
      Permutation comm = x.inverse() * y.inverse() * x * y;
      if (!comm.is_identity()) gens.insert(std::move(comm));
    }
  }
  std::vector<Permutation> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  return PermGroup(p_group.degree(), std::move(sorted), p_group.limits());
}

PermGroup center(const PermGroup& g) {
  std::vector<Permutation> keep;
  for (const auto& x : g.elements()) {
    bool central = std::all_of(g.generators().begin(), g.generators().end(),
                               [&](const Permutation& s) { return x * s == s * x; });
    if (central) keep.push_back(x);
  }
  return PermGroup::from_elements(g.degree(), std::move(keep), g.limits());
}

Permutation frattini_center_element(const PermGroup& p_group, std::uint64_t p) {
  if (is_elementary_abelian(p_group, p))
    throw Inapplicable("Sylow subgroup is elementary abelian; Phi(P) is trivial");
  PermGroup phi = frattini_subgroup(p_group, p);
  std::optional<Permutation> best;
  for (const auto& z : phi.elements()) {
    if (z.is_identity() || !z.pow(static_cast<std::int64_t>(p)).is_identity()) continue;
    bool central = std::all_of(p_group.generators().begin(), p_group.generators().end(),
                               [&](const Permutation& s) { return z * s == s * z; });
    if (central && (!best || z < *best)) best = z;
  }
  if (!best) throw std::logic_error("nontrivial normal subgroup of a p-group missed the center");
  return *best;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seeds) {
  std::vector<Permutation> gens;
  for (const auto& s : seeds)
    if (!s.is_identity()) gens.push_back(s);
  PermGroup closure(g.degree(), gens, g.limits());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& s : g.generators()) {
      Permutation c = gens[i].conjugate_by(s);
      if (closure.contains(c)) continue;
      gens.push_back(std::move(c));
      closure = PermGroup(g.degree(), gens, g.limits());
    }
  }
  return closure;
}

PermGroup derived_subgroup(const PermGroup& g) {
  const auto& gens = g.generators();
  std::vector<Permutation> comms;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
  return normal_closure(g, comms);
}

bool is_solvable(const PermGroup& g) {
  PermGroup current = g;
  while (current.order() > 1) {
    PermGroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<std::vector<Permutation>> classes;
  for (const auto& x : g.elements()) {
    if (seen.contains(x)) continue;
    std::vector<Permutation> cls{x};
    seen.insert(x);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (const auto& s : g.generators()) {
        Permutation c = cls[i].conjugate_by(s);
        if (seen.insert(c).second) cls.push_back(std::move(c));
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

PermGroup o_pprime_residual(const PermGroup& g, std::uint64_t p) {
  require_prime(p);
  if (g.order() % p != 0) return PermGroup::trivial(g.degree(), g.limits());
  return normal_closure(g, find_sylow(g, p).generators());
}

namespace {

template <typename Accept>
PermGroup accumulate_core(const PermGroup& g, const PermGroup& start, Accept accept) {
  PermGroup core = start;
  for (const auto& cls : conjugacy_classes(g)) {
    const Permutation& x = cls.front();
    if (core.contains(x)) continue;
    std::vector<Permutation> seeds = start.generators();
    seeds.push_back(x);
    PermGroup m = normal_closure(g, seeds);
    if (accept(m)) core = join(core, m);
  }
  return core;
}

}  // namespace

PermGroup p_prime_core(const PermGroup& g, std::uint64_t p) {
  require_prime(p);
  return accumulate_core(g, PermGroup::trivial(g.degree(), g.limits()),
                         [&](const PermGroup& m) { return m.order() % p != 0; });
}

PermGroup p_core(const PermGroup& g, std::uint64_t p) {
  require_prime(p);
  return accumulate_core(g, PermGroup::trivial(g.degree(), g.limits()),
                         [&](const PermGroup& m) { return is_p_group(m, p); });
}

bool is_Opp(const PermGroup& g, std::uint64_t p) {
  PermGroup base = p_prime_core(g, p);
  const std::uint64_t base_order = base.order_u64();
  PermGroup preimage = accumulate_core(g, base, [&](const PermGroup& m) {
    return is_p_power(m.order_u64() / base_order, p);
  });
  return preimage.order() == g.order();
}

}  // namespace pmod
