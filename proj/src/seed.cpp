#include "clusterlab/seed.hpp"

#include <algorithm>

namespace clusterlab {

CoefficientPair reduced(const CoefficientPair& pair) {
  const auto& a = pair.plus.terms()[0].exps;
  const auto& b = pair.minus.terms()[0].exps;
  Exponents common(a.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    common[i] = -std::min(a[i], b[i]);
    any = any || common[i] != 0;
  }
  if (!any) return pair;
  return {pair.plus.shifted(common), pair.minus.shifted(common)};
}

Seed Seed::initial(const Quiver& quiver, CoefficientMode mode) {
  const std::size_t n = quiver.size();
  TablePtr table = mode == CoefficientMode::Free ? VariableTable::cluster(n)
                                                 : VariableTable::with_coefficients(n);
  std::vector<LaurentPoly> cluster;
  std::vector<CoefficientPair> coefficients;
  cluster.reserve(n);
  coefficients.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    cluster.push_back(LaurentPoly::variable(table, i));
    if (mode == CoefficientMode::Free) {
      coefficients.push_back({LaurentPoly::constant(table, 1), LaurentPoly::constant(table, 1)});
    } else {
      coefficients.push_back({LaurentPoly::variable(table, table->plus_symbol(i)),
                              LaurentPoly::variable(table, table->minus_symbol(i))});
    }
  }
  return Seed(quiver, mode, std::move(table), std::move(cluster), std::move(coefficients));
}

Seed::Seed(Quiver quiver, CoefficientMode mode, TablePtr table, std::vector<LaurentPoly> cluster,
           std::vector<CoefficientPair> coefficients, MutationSequence history)
    : quiver_(std::move(quiver)),
      mode_(mode),
      table_(std::move(table)),
      cluster_(std::move(cluster)),
      coefficients_(std::move(coefficients)),
      history_(std::move(history)) {
  const std::size_t n = quiver_.size();
  if (cluster_.size() != n || coefficients_.size() != n) {
    throw InvalidQuiver("seed parts have inconsistent sizes");
  }
  if (table_->cluster_size() != n) throw TableMismatch("variable table does not match quiver size");
  for (const auto& c : cluster_) {
    if (c.is_zero()) throw InvalidQuiver("cluster entries must be nonzero");
  }
  for (const auto& pair : coefficients_) {
    for (const auto* p : {&pair.plus, &pair.minus}) {
      if (!p->is_monomial() || p->terms()[0].coef != 1) {
        throw InvalidQuiver("coefficient entries must be monomials with coefficient 1");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (p->terms()[0].exps[i] != 0) throw InvalidQuiver("coefficient entries may not involve x-variables");
      }
    }
  }
  for (auto k : history_) {
    if (k >= n) throw InvalidVertex("history refers to a vertex out of range");
  }
}

LaurentPoly Seed::exchange_binomial(std::size_t k) const {
  if (k >= size()) throw InvalidVertex("vertex " + std::to_string(k + 1) + " out of range");
  LaurentPoly in = coefficients_[k].plus;
  LaurentPoly out = coefficients_[k].minus;
  for (std::size_t i = 0; i < size(); ++i) {
    if (const int m = quiver_.multiplicity(i, k); m > 0) in *= cluster_[i].pow(static_cast<unsigned>(m));
    if (const int m = quiver_.multiplicity(k, i); m > 0) out *= cluster_[i].pow(static_cast<unsigned>(m));
  }
  return in + out;
}

Seed Seed::mutate(std::size_t k) const {
  if (k >= size()) throw InvalidVertex("vertex " + std::to_string(k + 1) + " out of range");
  Seed next = *this;
  next.cluster_[k] = exact_div(exchange_binomial(k), cluster_[k]);

  // p'_k^{+-} = p_k^{-+}. For i != k only the ratio p'^+_i / p'^-_i is fixed;
  // the stored pair is the coprime one with that ratio, which makes mu_k an
  // involution on coefficient tuples.
  std::swap(next.coefficients_[k].plus, next.coefficients_[k].minus);
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == k) continue;
    const int b_ki = quiver_.exchange(k, i);
    if (b_ki > 0) {
      next.coefficients_[i].plus = coefficients_[k].plus.pow(static_cast<unsigned>(b_ki)) * coefficients_[i].plus;
    } else if (b_ki < 0) {
      next.coefficients_[i].minus = coefficients_[k].minus.pow(static_cast<unsigned>(-b_ki)) * coefficients_[i].minus;
    }
    if (b_ki != 0) next.coefficients_[i] = reduced(next.coefficients_[i]);
  }
  next.quiver_ = quiver_.mutate(k);
  next.history_.push_back(k);
  return next;
}

Seed Seed::apply(const MutationSequence& sequence) const {
  Seed s = *this;
  for (auto k : sequence) s = s.mutate(k);
  return s;
}

std::vector<ClusterVariable> Seed::adjacent_variables() const {
  std::vector<ClusterVariable> out;
  out.reserve(size());
  for (std::size_t j = 0; j < size(); ++j) {
    MutationSequence history = history_;
    history.push_back(j);
    out.push_back(ClusterVariable{exact_div(exchange_binomial(j), cluster_[j]), std::move(history), j});
  }
  return out;
}

Seed initial_seed(const Quiver& quiver, CoefficientMode mode) { return Seed::initial(quiver, mode); }
Seed mutate_seed(const Seed& seed, std::size_t k) { return seed.mutate(k); }
Seed apply_sequence(const Seed& seed, const MutationSequence& sequence) { return seed.apply(sequence); }
std::vector<ClusterVariable> adjacent_variables(const Seed& seed) { return seed.adjacent_variables(); }

}  // namespace clusterlab
