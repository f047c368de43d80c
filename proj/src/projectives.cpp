#include "clusterlab/projectives.hpp"

#include <algorithm>

namespace clusterlab {

std::vector<DimVector> projective_dim_vectors(const Quiver& q) {
  const auto order = sink_order(q);  // throws NotAcyclic
  const std::size_t n = q.size();
  std::vector<DimVector> dims(n, DimVector(n, 0));
  // Sinks first: every successor of v is finished before v.
  for (auto v : order) {
    dims[v][v] = 1;
    for (std::size_t w = 0; w < n; ++w) {
      const int m = q.multiplicity(v, w);
      if (m == 0) continue;
      for (std::size_t j = 0; j < n; ++j) dims[v][j] += m * dims[w][j];
    }
  }
  return dims;
}

namespace {

bool is_initial_cluster(const Seed& seed) {
  for (std::size_t i = 0; i < seed.size(); ++i) {
    if (seed.variable(i) != LaurentPoly::variable(seed.table(), i)) return false;
  }
  return true;
}

struct Schedule {
  Seed seed;
  std::vector<CoefficientPair> coefficients;
};

Schedule run_schedule(const Seed& seed) {
  const auto order = sink_order(seed.quiver());
  Seed s = seed;
  std::vector<CoefficientPair> used = seed.coefficients();
  for (auto v : order) {
    used[v] = s.coefficients()[v];
    s = s.mutate(v);
  }
  if (s.quiver() != seed.quiver()) {
    throw InternalFault("sink-order schedule did not return the quiver to itself");
  }
  return {std::move(s), std::move(used)};
}

}  // namespace

Seed sink_schedule(const Seed& seed) { return run_schedule(seed).seed; }

ProjectiveSet projectives_acyclic(const Seed& seed) {
  auto [result, used] = run_schedule(seed);
  ProjectiveSet ps{result.cluster(), {}, std::move(used)};
  if (is_initial_cluster(seed)) {
    const auto dims = projective_dim_vectors(seed.quiver());
    for (std::size_t i = 0; i < seed.size(); ++i) {
      const auto d = denominator_vector(ps.values[i]);
      if (!std::equal(d.begin(), d.end(), dims[i].begin())) {
        throw InternalFault("denominator of x_P" + std::to_string(i + 1) + " differs from dim P" +
                            std::to_string(i + 1));
      }
    }
  }
  return ps;
}

ProjectiveSet projectives_via(const Seed& seed, const MutationSequence& route) {
  if (route.empty()) return projectives_acyclic(seed);
  const Seed companion_root = seed.apply(route);
  if (!is_acyclic(companion_root.quiver())) throw NotAcyclic("route does not reach an acyclic quiver");
  Seed companion = sink_schedule(companion_root);
  MutationSequence back(route.rbegin(), route.rend());
  companion = companion.apply(back);
  if (companion.quiver() != seed.quiver()) {
    throw InternalFault("companion seed did not return to the original quiver");
  }
  return ProjectiveSet{companion.cluster(), route, {}};
}

ProjectiveSet projectives_general(const Seed& seed, std::size_t max_depth) {
  auto route = find_acyclic_sequence(seed.quiver(), max_depth);
  if (!route) {
    throw NotFound("no acyclic quiver within " + std::to_string(max_depth) + " mutations");
  }
  return projectives_via(seed, *route);
}

bool exchange_identity_check(const Seed& seed, const ProjectiveSet& ps) {
  const auto& q = seed.quiver();
  const auto& table = seed.table();
  const std::size_t n = seed.size();
  if (ps.values.size() != n) return false;
  const LaurentPoly one = LaurentPoly::constant(table, 1);
  for (std::size_t j = 0; j < n; ++j) {
    LaurentPoly in = ps.exchange_coefficients.empty() ? one : ps.exchange_coefficients[j].plus;
    LaurentPoly out = ps.exchange_coefficients.empty() ? one : ps.exchange_coefficients[j].minus;
    for (std::size_t i = 0; i < n; ++i) {
      if (const int m = q.multiplicity(i, j); m > 0) in *= seed.variable(i).pow(static_cast<unsigned>(m));
      if (const int m = q.multiplicity(j, i); m > 0) in *= ps.values[i].pow(static_cast<unsigned>(m));
    }
    if (seed.variable(j) * ps.values[j] != in + out) return false;
  }
  return true;
}

}  // namespace clusterlab
