#pragma once

// Projective cluster variables.
//
// Acyclic seeds: mutate once at every vertex in sink order. The entry created
// at vertex v is x_{P_v}, whose denominator is x^{dim P_v}, and the quiver
// returns to its original shape.
//
// Seeds mutation-equivalent to an acyclic one (companion pattern): take the
// shortest route r to an acyclic seed Σ_0 = μ_r(Σ), replace Σ_0's cluster by
// its projective variables through the full sink-order schedule, then walk
// back along reversed(r). The entry at vertex i of the result is x_{P_i} of Σ.

#include <cstdint>
#include <vector>

#include "clusterlab/seed.hpp"

namespace clusterlab {

/// Entry j counts directed paths i ~> j, including the trivial path.
using DimVector = std::vector<std::int64_t>;

struct ProjectiveSet {
  std::vector<LaurentPoly> values;  // x_{P_1}, ..., x_{P_n}
  /// Route to the acyclic seed used (empty for acyclic input).
  MutationSequence route;
  /// Acyclic input only: the (p^+, p^-) used in the exchange that produced
  /// x_{P_j}, so x_j x_{P_j} = p^+ prod x_i prod x_{P_l} + p^-.
  std::vector<CoefficientPair> exchange_coefficients;
};

/// dim P_i for every vertex i. Throws NotAcyclic.
std::vector<DimVector> projective_dim_vectors(const Quiver& q);

/// Applies the full sink-order schedule and returns the resulting seed,
/// whose cluster consists of the projective variables of `seed`.
/// Throws NotAcyclic; throws InternalFault if the quiver does not return.
Seed sink_schedule(const Seed& seed);

ProjectiveSet projectives_acyclic(const Seed& seed);

/// Companion pattern along the lexicographically smallest shortest route.
/// Throws NotFound if no acyclic quiver lies within max_depth mutations.
ProjectiveSet projectives_general(const Seed& seed, std::size_t max_depth = 8);

/// Companion pattern along a caller-chosen route (must reach an acyclic quiver).
ProjectiveSet projectives_via(const Seed& seed, const MutationSequence& route);

/// Checks x_j x_{P_j} = p_j^+ prod_{i->j} x_i prod_{j->l} x_{P_l} + p_j^- for
/// all j, with arrow multiplicities as exponents. The p's come from
/// ps.exchange_coefficients when present, else 1.
bool exchange_identity_check(const Seed& seed, const ProjectiveSet& ps);

}  // namespace clusterlab
