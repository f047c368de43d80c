#pragma once

// Seeds (cluster, coefficient tuple, quiver) and the exchange relation.

#include <vector>

#include "clusterlab/laurent.hpp"
#include "clusterlab/quiver.hpp"

namespace clusterlab {

enum class CoefficientMode { Free, Symbolic };

/// (p_i^+, p_i^-): Laurent monomials in the coefficient symbols, coefficient 1.
struct CoefficientPair {
  LaurentPoly plus;
  LaurentPoly minus;

  friend bool operator==(const CoefficientPair&, const CoefficientPair&) = default;
};

/// Divides both entries by their monomial gcd; the ratio is unchanged.
CoefficientPair reduced(const CoefficientPair& pair);

struct ClusterVariable {
  LaurentPoly value;
  MutationSequence history;  // sequence from the root seed
  std::size_t position = 0;  // 0-based vertex
};

class Seed {
 public:
  /// cluster = (x1..xn); coefficients all 1 (free) or fresh symbols (symbolic).
  static Seed initial(const Quiver& quiver, CoefficientMode mode);

  /// Assembles a seed from explicit parts; validates sizes and that
  /// coefficient entries are monomials.
  Seed(Quiver quiver, CoefficientMode mode, TablePtr table, std::vector<LaurentPoly> cluster,
       std::vector<CoefficientPair> coefficients, MutationSequence history = {});

  std::size_t size() const noexcept { return quiver_.size(); }
  const Quiver& quiver() const noexcept { return quiver_; }
  CoefficientMode mode() const noexcept { return mode_; }
  const TablePtr& table() const noexcept { return table_; }
  const std::vector<LaurentPoly>& cluster() const noexcept { return cluster_; }
  const LaurentPoly& variable(std::size_t i) const { return cluster_.at(i); }
  const std::vector<CoefficientPair>& coefficients() const noexcept { return coefficients_; }
  const MutationSequence& history() const noexcept { return history_; }

  /// p_k^+ prod_{i->k} c_i^{m(i,k)} + p_k^- prod_{k->i} c_i^{m(k,i)}.
  LaurentPoly exchange_binomial(std::size_t k) const;

  /// Seed mutation. Throws InvalidVertex; a NonExactDivision escaping from
  /// here indicates an engine bug (the Laurent phenomenon guarantees exactness).
  Seed mutate(std::size_t k) const;
  /// Left to right: the first listed vertex is mutated first.
  Seed apply(const MutationSequence& sequence) const;

  /// (x_1', ..., x_n'), x_j' being the new entry of mu_j(seed).
  std::vector<ClusterVariable> adjacent_variables() const;

  /// Seeds compare by cluster, coefficients and quiver; history is ignored.
  friend bool operator==(const Seed& a, const Seed& b) {
    return a.quiver_ == b.quiver_ && a.cluster_ == b.cluster_ && a.coefficients_ == b.coefficients_;
  }

 private:
  Quiver quiver_;
  CoefficientMode mode_ = CoefficientMode::Free;
  TablePtr table_;
  std::vector<LaurentPoly> cluster_;
  std::vector<CoefficientPair> coefficients_;
  MutationSequence history_;
};

Seed initial_seed(const Quiver& quiver, CoefficientMode mode);
Seed mutate_seed(const Seed& seed, std::size_t k);
Seed apply_sequence(const Seed& seed, const MutationSequence& sequence);
std::vector<ClusterVariable> adjacent_variables(const Seed& seed);

}  // namespace clusterlab
