#pragma once

// Exact multivariate Laurent polynomials with arbitrary-precision integer
// coefficients. Cluster variables x1..xn and the coefficient symbols
// (ppI for p_I^+, pmI for p_I^-) share a single exponent vector, so the
// coefficient group is realized as Laurent monomials in the p-symbols.

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clusterlab/error.hpp"

namespace clusterlab {

using Integer = mpz_class;
using Exponents = boost::container::small_vector<std::int32_t, 12>;

/// Ordered variable names. The first `cluster_size()` entries are x1..xn;
/// in symbolic mode they are followed by pp1, pm1, pp2, pm2, ...
class VariableTable {
 public:
  /// Coefficient-free table: x1..xn.
  static std::shared_ptr<const VariableTable> cluster(std::size_t n);
  /// x1..xn followed by the 2n coefficient symbols.
  static std::shared_ptr<const VariableTable> with_coefficients(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  std::size_t cluster_size() const noexcept { return cluster_size_; }
  bool has_coefficients() const noexcept { return names_.size() > cluster_size_; }

  const std::string& name(std::size_t index) const { return names_.at(index); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Index of p_vertex^+ / p_vertex^- (vertex is 0-based).
  std::size_t plus_symbol(std::size_t vertex) const;
  std::size_t minus_symbol(std::size_t vertex) const;

  bool operator==(const VariableTable& other) const { return names_ == other.names_; }

 private:
  VariableTable(std::vector<std::string> names, std::size_t cluster_size)
      : names_(std::move(names)), cluster_size_(cluster_size) {}

  std::vector<std::string> names_;
  std::size_t cluster_size_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

struct Term {
  Exponents exps;
  Integer coef;
};

/// Display/storage order on monomials: x-degree ascending, then x-exponents
/// lexicographically descending (x1 before x2), then the same two keys on the
/// coefficient symbols. Reversed, this is an admissible graded order, so the
/// last stored term is the leading term used by division.
struct MonomialOrder {
  std::size_t cluster_size;
  std::strong_ordering compare(const Exponents& a, const Exponents& b) const;
  bool operator()(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }
};

class LaurentPoly {
 public:
  explicit LaurentPoly(TablePtr table);

  static LaurentPoly constant(TablePtr table, const Integer& value);
  static LaurentPoly variable(TablePtr table, std::size_t index);
  static LaurentPoly monomial(TablePtr table, Exponents exps, const Integer& coef = 1);
  /// Canonicalizes an arbitrary term list (sorts, merges, drops zeros).
  static LaurentPoly from_terms(TablePtr table, std::vector<Term> terms);

  const TablePtr& table() const noexcept { return table_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_one() const;

  /// Leading term under the reversed display order (the last stored term).
  const Term& leading_term() const { return terms_.back(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly pow(unsigned exponent) const;
  /// Multiplies by the Laurent monomial x^shift (coefficient 1).
  LaurentPoly shifted(const Exponents& shift) const;
  LaurentPoly scaled(const Integer& factor) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  /// Total order used for canonical sorting of sets of polynomials.
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

  std::size_t hash() const;

 private:
  void check_same_table(const LaurentPoly& other) const;
  MonomialOrder order() const { return MonomialOrder{table_->cluster_size()}; }

  TablePtr table_;
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// Returns q with q * den == num. Throws NonExactDivision when no Laurent
/// quotient with integer coefficients exists.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

/// d_i = -(min exponent of x_i); coefficient symbols are ignored.
std::vector<std::int64_t> denominator_vector(const LaurentPoly& p);

/// Sum of coefficients, i.e. the value with every variable set to 1.
Integer evaluate_at_ones(const LaurentPoly& p);

/// Rewrites p over `target`, keeping the exponents of the target's variables
/// (matched by name) and substituting 1 for every other variable.
LaurentPoly specialize(const LaurentPoly& p, const TablePtr& target);

/// Splits p into numerator * x^-denominator with the denominator a monomial in
/// the cluster variables only (the reduced-fraction display form).
struct Fraction {
  LaurentPoly numerator;
  Exponents denominator;  // nonnegative, over all table variables (p-part 0)
};
Fraction as_fraction(const LaurentPoly& p);

/// Canonical text, e.g. "(x1*x4 + x2^2 + 2*x2*x3 + x3^2) / (x1*x2*x3)".
std::string to_string(const LaurentPoly& p);
std::string monomial_to_string(const Exponents& exps, const VariableTable& table);

/// Parses sums, products, integer powers, parentheses and exact division.
LaurentPoly parse_laurent(std::string_view text, const TablePtr& table);

}  // namespace clusterlab

template <>
struct std::hash<clusterlab::LaurentPoly> {
  std::size_t operator()(const clusterlab::LaurentPoly& p) const { return p.hash(); }
};
