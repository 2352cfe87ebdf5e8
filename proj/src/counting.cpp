#include "pmod/counting.hpp"

#include <algorithm>
#include <random>

#include "pmod/errors.hpp"
#include "pmod/stabilizer.hpp"
#include "pmod/sylow.hpp"

namespace pmod {

BigInt subsets_fixed_count(std::span<const Permutation> gens, std::size_t degree) {
  return BigInt(1) << orbits(gens, degree).size();
}

BigInt subsets_fixed_count(const Permutation& g) {
  return subsets_fixed_count(std::span<const Permutation>(&g, 1), g.degree());
}

SylowCoverBound sylow_cover_bound(const PermGroup& g, std::uint64_t p) {
  PermGroup sylow = find_sylow(g, p);
  PermGroup norm = normalizer(g, sylow);
  SylowCoverBound bound;
  bound.sylow_count = g.order_u64() / norm.order_u64();
  bound.sylow_orbits = orbits(sylow).size();
  bound.exact = BigInt(bound.sylow_count) << bound.sylow_orbits;
  if (!is_elementary_abelian(sylow, p)) {
    const Permutation z = frattini_center_element(sylow, p);
    const std::size_t n = g.degree(), f = z.fixed_point_count();
    bound.coarse_exponent = f + (n - f) / (p * p);
    bound.coarse = BigInt(bound.sylow_count) << *bound.coarse_exponent;
  }
  return bound;
}

CountingCertificate counting_certificate(const PermGroup& g, std::uint64_t p) {
  PermGroup sylow = find_sylow(g, p);
  if (is_elementary_abelian(sylow, p))
    throw Inapplicable("Sylow " + std::to_string(p) + "-subgroup is elementary abelian");
  CountingCertificate cert;
  cert.p = p;
  cert.n = g.degree();
  cert.z = frattini_center_element(sylow, p);
  cert.f = cert.z.fixed_point_count();
  if ((cert.n - cert.f) % p != 0) throw std::logic_error("moved points of z do not split into p-cycles");
  cert.sylow_norm_index = g.order_u64() / normalizer(g, sylow).order_u64();
  cert.lhs_power = boost::multiprecision::pow(BigInt(cert.sylow_norm_index), static_cast<unsigned>(p * p));
  cert.rhs_exponent = (cert.n - cert.f) * (p - 1);
  cert.verdict = cert.lhs_power < (BigInt(1) << cert.rhs_exponent);
  return cert;
}

bool orbit_size_floor_check(const PermGroup& p_group, std::uint64_t p, const Permutation& z) {
  if (z.order() != p) throw InvalidArgument("z must have order p");
  if (!center(p_group).contains(z) || !frattini_subgroup(p_group, p).contains(z))
    throw InvalidArgument("z must lie in the Frattini subgroup and the center of P");
  for (const auto& orbit : orbits(p_group)) {
    const bool moved = std::any_of(orbit.begin(), orbit.end(), [&](Point x) { return z[x] != x; });
    if (moved && orbit.size() < p * p) return false;
  }
  return true;
}

std::optional<PointSet> randomized_witness_from_z(const PermGroup& g, std::uint64_t p, const Permutation& z,
                                                  std::uint64_t trials, std::uint64_t seed,
                                                  std::uint64_t* trial_used) {
  if (z.degree() != g.degree()) throw InvalidArgument("z has the wrong degree");
  const std::uint64_t full = p_part(g.order_u64(), p);
  const auto z_orbits = orbits(std::span<const Permutation>(&z, 1), z.degree());
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed + trial);
    PointSet delta(g.degree());
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < z_orbits.size(); ++i) {
      if (i % 64 == 0) bits = rng();
      if ((bits >> (i % 64)) & 1u)
        for (Point x : z_orbits[i]) delta.insert(x);
    }
    if (stab_p_part(g, delta, p) < full) {
      if (trial_used) *trial_used = trial;
      return delta;
    }
  }
  return std::nullopt;
}

}  // namespace pmod
