#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmod/affine.hpp"
#include "pmod/point_set.hpp"
#include "pmod/zoo.hpp"

namespace pmod {

// Candidate generators for p-moderation witnesses. None of them claims
// success: each returns subsets that the caller must verify with
// stab_p_part. They throw Inapplicable when their structural
// preconditions fail.

/// Delta = W, the additive subgroup of order p spanned by the least nonzero
/// vector. Needs p | |V| and |V|_p > p.
PointSet translation_witness(const AffineGroup& g, std::uint64_t p);

/// Least v with trivial stabilizer in `linear` (a group fixing 0).
std::optional<Point> regular_vector(const PermGroup& linear);

/// Least pair (v, w), ordered lexicographically, whose joint stabilizer in
/// `linear` is trivial. Both coordinates range over all of V; the scan is
/// limited to |V|^2 <= 2^22.
std::optional<std::pair<Point, Point>> regular_pair(const PermGroup& linear, bool nonzero_only = false);

/// Odd p: from a regular pair (v, w) and t in H of order p, the t-orbits
/// O1, O2 give {0} u O1 when O1 = O2, and otherwise {0} u O1 u O2 followed
/// by the fallback {0, w} u O1.
std::vector<PointSet> orbit_witness_odd_p(const AffineGroup& g, std::uint64_t p);

/// p = 2: Gamma = {0, v, v^t} for v in a regular H-orbit and t the first
/// involution of H.
PointSet p2_regular_witness(const AffineGroup& g);

/// p = 2: Gamma = {0, w, v, -v} for a noncentral involution u of H with
/// v^u = -v and w^u = w (v, w nonzero). Needs odd characteristic.
PointSet metacyclic_witness(const AffineGroup& g);

/// {(0,0), (1,1)} in a product action, i.e. points 0 and n2 + 1.
PointSet product_diagonal_witness(std::size_t first_degree, std::size_t second_degree);

/// The orbit {v, v^t, ...} of the least point moved by the first element t
/// of order p.
PointSet cyclic_orbit_witness(const PermGroup& g, std::uint64_t p);

struct WitnessCandidate {
  std::string stage;
  PointSet subset;
};

/// Every applicable constructor's output for the built group, in the order
/// the classifier tries them. Constructors that do not apply are skipped and
/// their reason recorded in `skipped`.
std::vector<WitnessCandidate> witness_candidates(const BuiltGroup& g, std::uint64_t p,
                                                 std::vector<std::string>* skipped = nullptr);

/// The p-structure conditions a minimal counterexample to moderation would
/// satisfy: coprime action, H = O^{p'}(H), H = O_{p',p}(H), and an
/// elementary abelian Sylow p-subgroup of order p^2.
struct ReductionConditions {
  bool coprime = false;
  bool residual_is_whole = false;
  bool is_opp = false;
  bool sylow_order_p_squared = false;
  bool sylow_elementary_abelian = false;
};

ReductionConditions reduction_conditions(const AffineGroup& g, std::uint64_t p);

}  // namespace pmod
