#pragma once

#include <cstdint>
#include <vector>

#include "pmod/perm_group.hpp"

namespace pmod {

/// Largest power of p dividing n (n >= 1). Throws InvalidArgument if p is
/// not prime or n is zero.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
BigInt p_part(const BigInt& n, std::uint64_t p);

bool is_p_power(std::uint64_t n, std::uint64_t p);

bool is_p_group(const PermGroup& g, std::uint64_t p);
bool is_abelian(const PermGroup& g);

/// One Sylow p-subgroup, grown from the first nontrivial p-element in
/// element order by repeatedly adjoining the first p-element of N_G(P) that
/// lies outside P. Throws InvalidArgument when p does not divide |G|.
PermGroup find_sylow(const PermGroup& g, std::uint64_t p);

struct SylowData {
  std::uint64_t p = 0;
  PermGroup representative;
  /// Conjugates indexed by right cosets of N_G(P), first coset first.
  std::vector<PermGroup> conjugates;
  std::uint64_t count = 0;
  std::uint64_t normalizer_index = 0;
};

/// All Sylow p-subgroups as conjugates P^g over right coset representatives
/// g of N_G(P). ResourceLimit when n_p exceeds `max_count`.
SylowData all_sylows(const PermGroup& g, std::uint64_t p, std::uint64_t max_count = 10'000);

/// Throws InvalidArgument unless P is a p-group.
bool is_elementary_abelian(const PermGroup& p_group, std::uint64_t p);

/// Generated by p-th powers and commutators.
PermGroup frattini_subgroup(const PermGroup& p_group, std::uint64_t p);

PermGroup center(const PermGroup& g);

/// The least (by image array) element of order p in Phi(P) and Z(P).
/// Throws Inapplicable for an elementary abelian P, InvalidArgument for a
/// non-p-group.
Permutation frattini_center_element(const PermGroup& p_group, std::uint64_t p);

/// Smallest normal subgroup of G containing `gens`.
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& gens);

/// Classes listed by first appearance in element order; each class in
/// discovery order.
/// [G, G]: normal closure of the commutators of the generators.
PermGroup derived_subgroup(const PermGroup& g);
/// Whether the derived series reaches the trivial group.
bool is_solvable(const PermGroup& g);

std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g);

/// O^{p'}(G): the normal closure of a Sylow p-subgroup. Trivial when p does
/// not divide |G|.
PermGroup o_pprime_residual(const PermGroup& g, std::uint64_t p);

/// O_{p'}(G), accumulated from class normal closures of p'-order.
PermGroup p_prime_core(const PermGroup& g, std::uint64_t p);

/// O_p(G), accumulated from class normal closures of p-power order.
PermGroup p_core(const PermGroup& g, std::uint64_t p);

/// True iff G = O_{p',p}(G), i.e. the preimage of O_p(G / O_{p'}(G)) is G.
bool is_Opp(const PermGroup& g, std::uint64_t p);

}  // namespace pmod
