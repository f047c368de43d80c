#pragma once

// Lower bound algebras L(Σ) = Z[x_i, x_i'] and L_P(Σ) = Z[x_i, x_{P_i}],
// standard monomials, degree-bounded membership with certificates, and the
// cluster-variable inventories the verification drivers run over.

#include <gmpxx.h>

#include <map>
#include <unordered_map>
#include <optional>
#include <string>
#include <vector>

#include "clusterlab/linalg.hpp"
#include "clusterlab/projectives.hpp"
#include "clusterlab/seed.hpp"

namespace clusterlab {

using Rational = mpq_class;

/// Generators x1..xn, g1..gn; g_i is x_i' (Lower) or x_{P_i} (Projective).
struct GeneratorSet {
  enum class Kind { Lower, Projective };

  Kind kind = Kind::Projective;
  std::vector<LaurentPoly> x;
  std::vector<LaurentPoly> g;

  std::size_t rank() const noexcept { return x.size(); }
  std::size_t size() const noexcept { return 2 * x.size(); }
  /// Symbol i < n is x_{i+1}, otherwise g_{i-n+1}.
  const LaurentPoly& generator(std::size_t symbol) const { return symbol < x.size() ? x[symbol] : g[symbol - x.size()]; }
  std::string symbol_name(std::size_t symbol) const;
  const TablePtr& table() const { return x.front().table(); }
};

GeneratorSet lp_generators(const Seed& seed, std::size_t max_depth = 8);
GeneratorSet l_generators(const Seed& seed);

/// Exponent vector over the 2n generator symbols (x-part first).
using GeneratorMonomial = std::vector<std::uint32_t>;

bool is_standard(const GeneratorMonomial& m);
unsigned degree(const GeneratorMonomial& m);

/// All monomials in 2n symbols of total degree <= bound containing no x_i g_i,
/// ordered by degree, then lexicographically descending.
std::vector<GeneratorMonomial> standard_monomials(std::size_t n, unsigned bound);
std::vector<GeneratorMonomial> standard_monomials(const GeneratorSet& gens, unsigned bound);

LaurentPoly expand(const GeneratorMonomial& m, const GeneratorSet& gens);

/// Exact rank over Q of the coefficient matrix of `polys`.
std::size_t rank_over_rationals(const std::vector<LaurentPoly>& polys);

struct RankReport {
  unsigned bound = 0;
  std::size_t count = 0;
  std::size_t rank = 0;
  bool full() const noexcept { return rank == count; }
};

/// Rank of the expansions of the standard monomials up to `bound`.
RankReport standard_monomial_rank(const GeneratorSet& gens, unsigned bound);

/// target = sum coef * expand(monomial).
struct MembershipCertificate {
  std::vector<std::pair<GeneratorMonomial, Rational>> terms;

  bool integral() const;
  unsigned degree() const;
  /// Re-expands the certificate and compares with `target`; independent of the solver.
  bool verify(const LaurentPoly& target, const GeneratorSet& gens) const;
  /// e.g. "x2*g1 - 1"; terms by degree descending, then lexicographically descending.
  std::string to_string(const GeneratorSet& gens) const;
};

struct ExponentsHasher {
  std::size_t operator()(const Exponents& e) const noexcept;
};

/// Incremental solver: generator monomials are expanded degree by degree and
/// kept in echelon form, so repeated queries against one generator set share
/// the work. Within a degree, standard monomials enter the basis first.
class MembershipSolver {
 public:
  explicit MembershipSolver(GeneratorSet gens);

  /// Certificate using monomials of degree <= bound, or nullopt
  /// (NotFoundUpToBound). Throws TableMismatch.
  std::optional<MembershipCertificate> solve(const LaurentPoly& target, unsigned bound);

  const GeneratorSet& generators() const noexcept { return gens_; }
  unsigned degree_reached() const noexcept { return reached_; }
  std::size_t basis_size() const noexcept { return basis_.rank(); }

 private:
  void extend();
  std::optional<linalg::SparseVector> to_row(const LaurentPoly& p, bool intern);

  GeneratorSet gens_;
  linalg::EchelonBasis basis_;
  unsigned reached_ = 0;
  bool started_ = false;
  std::vector<GeneratorMonomial> monomials_;  // indexed by input id
  std::map<GeneratorMonomial, LaurentPoly> layer_;  // expansions of the last degree reached
  std::unordered_map<Exponents, std::uint32_t, ExponentsHasher> columns_;
};

std::optional<MembershipCertificate> membership(const LaurentPoly& target, const GeneratorSet& gens, unsigned bound);

/// Total degree of the denominator monomial (negative entries count as 0).
std::int64_t denominator_degree(const LaurentPoly& p);

struct EnumerationReport {
  std::vector<ClusterVariable> variables;  // distinct, sorted by value
  std::size_t seeds_visited = 0;
  bool closed = false;
  bool seed_cap_hit = false;
  bool degree_cap_hit = false;
};

/// Breadth-first search over seeds (deduplicated by sorted cluster, plus the
/// coefficients in symbolic mode). Seeds holding a variable whose denominator
/// degree exceeds degree_cap are not expanded. closed means the frontier
/// emptied with neither cap in play.
EnumerationReport enumerate_cluster_variables(const Seed& seed, std::size_t seed_cap = 5000,
                                              std::int64_t degree_cap = 16);

/// Distinct variables of all seeds within `radius` mutations, in discovery order.
std::vector<ClusterVariable> variables_within_radius(const Seed& seed, std::size_t radius);

struct VerifyCaps {
  unsigned degree_bound = 6;
  std::size_t seed_cap = 5000;
  std::int64_t degree_cap = 16;
  std::size_t radius = 4;
  std::size_t max_depth = 8;
};

struct VerifyEntry {
  enum class Status { Generator, Certified, NotFoundUpToBound };
  ClusterVariable variable;
  Status status = Status::NotFoundUpToBound;
  std::optional<MembershipCertificate> certificate;
};

struct VerifyReport {
  enum class Scope { Closure, Radius };
  Scope scope = Scope::Closure;
  MutationType type;
  GeneratorSet generators;
  EnumerationReport enumeration;  // Closure scope only
  std::vector<VerifyEntry> entries;
  VerifyCaps caps;

  std::size_t count(VerifyEntry::Status s) const;
  bool all_certified() const { return count(VerifyEntry::Status::NotFoundUpToBound) == 0; }
};

/// Checks L_P(seed) = A(seed) on the variables in reach: the whole closure
/// when the enumeration closes, else every variable within caps.radius.
VerifyReport verify_lp_equals_a(const Seed& seed, const VerifyCaps& caps = {});

std::string to_string(VerifyEntry::Status s);

}  // namespace clusterlab
