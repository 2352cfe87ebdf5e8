#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "pmod/perm_group.hpp"
#include "pmod/point_set.hpp"

namespace pmod {

/// Number of subsets fixed by <gens>: 2^(number of orbits).
BigInt subsets_fixed_count(std::span<const Permutation> gens, std::size_t degree);
BigInt subsets_fixed_count(const Permutation& g);

/// Upper bounds on how many subsets are stabilized by some Sylow
/// p-subgroup. `exact` is n_p * 2^(#orbits of P); orbit counts are the same
/// for all conjugates. `coarse` replaces the orbit count by
/// f + floor((n - f) / p^2), where f counts the fixed points of the
/// Frattini-center element z; it is only defined when P is not elementary
/// abelian.
struct SylowCoverBound {
  std::uint64_t sylow_count = 0;
  std::size_t sylow_orbits = 0;
  BigInt exact;
  std::optional<std::size_t> coarse_exponent;
  std::optional<BigInt> coarse;
};

SylowCoverBound sylow_cover_bound(const PermGroup& g, std::uint64_t p);

/// The counting criterion: with P a Sylow p-subgroup that is not elementary
/// abelian, z of order p in Phi(P) and Z(P), and f the fixed points of z,
/// G is p-moderate whenever |G : N_G(P)| < 2^((n - f)(1/p - 1/p^2)).
/// Evaluated exactly as |G : N_G(P)|^(p^2) < 2^((n - f)(p - 1)).
struct CountingCertificate {
  std::uint64_t p = 0;
  std::size_t n = 0;
  Permutation z;
  std::size_t f = 0;
  std::uint64_t sylow_norm_index = 0;
  /// sylow_norm_index^(p^2)
  BigInt lhs_power;
  /// (n - f)(p - 1); the right-hand side is 2^rhs_exponent.
  std::uint64_t rhs_exponent = 0;
  bool verdict = false;

  friend bool operator==(const CountingCertificate&, const CountingCertificate&) = default;
};

/// Throws Inapplicable when the Sylow p-subgroup is elementary abelian,
/// InvalidArgument when p does not divide |G|.
CountingCertificate counting_certificate(const PermGroup& g, std::uint64_t p);

/// True iff every P-orbit that meets a point moved by z has size >= p^2.
/// Throws InvalidArgument unless z has order p and lies in Phi(P) and Z(P).
bool orbit_size_floor_check(const PermGroup& p_group, std::uint64_t p, const Permutation& z);

/// Samples unions of <z>-orbits (one bit per orbit from std::mt19937_64
/// seeded with seed + trial) and returns the first whose stabilizer has
/// p-part below |G|_p. The lowest successful trial index goes to
/// `trial_used` when given.
std::optional<PointSet> randomized_witness_from_z(const PermGroup& g, std::uint64_t p, const Permutation& z,
                                                  std::uint64_t trials, std::uint64_t seed,
                                                  std::uint64_t* trial_used = nullptr);

}  // namespace pmod
