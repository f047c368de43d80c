#include "clusterlab/laurent.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "exponent_hash.hpp"

namespace clusterlab {

// ---------------------------------------------------------------------------
// VariableTable

std::shared_ptr<const VariableTable> VariableTable::cluster(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return std::shared_ptr<const VariableTable>(new VariableTable(std::move(names), n));
}

std::shared_ptr<const VariableTable> VariableTable::with_coefficients(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(3 * n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("pp" + std::to_string(i));
    names.push_back("pm" + std::to_string(i));
  }
  return std::shared_ptr<const VariableTable>(new VariableTable(std::move(names), n));
}

std::optional<std::size_t> VariableTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VariableTable::plus_symbol(std::size_t vertex) const {
  if (!has_coefficients() || vertex >= cluster_size_) {
    throw std::out_of_range("no coefficient symbol for vertex " + std::to_string(vertex + 1));
  }
  return cluster_size_ + 2 * vertex;
}

std::size_t VariableTable::minus_symbol(std::size_t vertex) const {
  return plus_symbol(vertex) + 1;
}

// ---------------------------------------------------------------------------
// MonomialOrder

namespace {

std::int64_t degree(const Exponents& e, std::size_t begin, std::size_t end) {
  std::int64_t d = 0;
  for (std::size_t i = begin; i < end; ++i) d += e[i];
  return d;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  const std::size_t nx = cluster_size;
  const std::size_t total = a.size();
  for (auto [begin, end] : {std::pair{std::size_t{0}, nx}, std::pair{nx, total}}) {
    auto da = degree(a, begin, end);
    auto db = degree(b, begin, end);
    if (da != db) return da <=> db;
    for (std::size_t i = begin; i < end; ++i) {
      if (a[i] != b[i]) return b[i] <=> a[i];  // larger exponent first
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(TablePtr table) : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("LaurentPoly requires a variable table");
}

LaurentPoly LaurentPoly::constant(TablePtr table, const Integer& value) {
  Exponents zero(table->size(), 0);
  return monomial(std::move(table), std::move(zero), value);
}

LaurentPoly LaurentPoly::variable(TablePtr table, std::size_t index) {
  if (index >= table->size()) throw std::out_of_range("variable index out of range");
  Exponents e(table->size(), 0);
  e[index] = 1;
  return monomial(std::move(table), std::move(e), 1);
}

LaurentPoly LaurentPoly::monomial(TablePtr table, Exponents exps, const Integer& coef) {
  if (exps.size() != table->size()) throw std::invalid_argument("exponent vector length mismatch");
  LaurentPoly p(std::move(table));
  if (coef != 0) p.terms_.push_back(Term{std::move(exps), coef});
  return p;
}

LaurentPoly LaurentPoly::from_terms(TablePtr table, std::vector<Term> terms) {
  LaurentPoly p(std::move(table));
  const auto order = p.order();
  for (const auto& t : terms) {
    if (t.exps.size() != p.table_->size()) throw std::invalid_argument("exponent vector length mismatch");
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order(a.exps, b.exps); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::is_one() const {
  if (terms_.size() != 1 || terms_[0].coef != 1) return false;
  return std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(), [](auto e) { return e == 0; });
}

void LaurentPoly::check_same_table(const LaurentPoly& other) const {
  if (table_ != other.table_ && !(*table_ == *other.table_)) {
    throw TableMismatch("operands use different variable tables");
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

// Merge of two sorted term lists; `sign` is +1 or -1 for b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign,
                              const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && order(a[i].exps, b[j].exps))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || order(b[j].exps, a[i].exps)) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coef = -out.back().coef;
    } else {
      Integer c = sign > 0 ? Integer(a[i].coef + b[j].coef) : Integer(a[i].coef - b[j].coef);
      if (c != 0) out.push_back(Term{a[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_same_table(other);
  terms_ = merge_terms(terms_, other.terms_, +1, order());
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_same_table(other);
  terms_ = merge_terms(terms_, other.terms_, -1, order());
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_table(b);
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.table_);
  if (a.is_monomial()) return b.shifted(a.terms_[0].exps).scaled(a.terms_[0].coef);
  if (b.is_monomial()) return a.shifted(b.terms_[0].exps).scaled(b.terms_[0].coef);

  const std::size_t width = a.table_->size();
  std::unordered_map<Exponents, Integer, detail::ExponentHash> acc;
  acc.reserve(a.size() * b.size());
  Exponents e(width, 0);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      for (std::size_t k = 0; k < width; ++k) e[k] = ta.exps[k] + tb.exps[k];
      auto [it, inserted] = acc.try_emplace(e);
      mpz_addmul(it->second.get_mpz_t(), ta.coef.get_mpz_t(), tb.coef.get_mpz_t());
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [exps, coef] : acc) {
    if (coef != 0) terms.push_back(Term{exps, std::move(coef)});
  }
  const auto order = a.order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return order(x.exps, y.exps); });
  LaurentPoly r(a.table_);
  r.terms_ = std::move(terms);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result = constant(table_, 1);
  LaurentPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
  if (shift.size() != table_->size()) throw std::invalid_argument("shift length mismatch");
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    for (std::size_t k = 0; k < shift.size(); ++k) t.exps[k] += shift[k];
  }
  // A common shift preserves the relative order of all terms.
  return r;
}

LaurentPoly LaurentPoly::scaled(const Integer& factor) const {
  if (factor == 0) return LaurentPoly(table_);
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coef *= factor;
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.table_ != b.table_ && !(*a.table_ == *b.table_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
  const auto order = a.order();
  const std::size_t common = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (auto c = order.compare(a.terms_[i].exps, b.terms_[i].exps); c != 0) return c;
    int cc = cmp(a.terms_[i].coef, b.terms_[i].coef);
    if (cc != 0) return cc <=> 0;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& t : terms_) {
    h = detail::hash_combine(h, detail::ExponentHash{}(t.exps));
    h = detail::hash_combine(h, static_cast<std::size_t>(mpz_get_si(t.coef.get_mpz_t())));
  }
  return h;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

// ---------------------------------------------------------------------------
// Division

namespace {

Exponents min_exponents(const LaurentPoly& p) {
  Exponents m = p.terms().front().exps;
  for (const auto& t : p.terms()) {
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], t.exps[k]);
  }
  return m;
}

Exponents negated(Exponents e) {
  for (auto& v : e) v = -v;
  return e;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw NonExactDivision("division by the zero polynomial");
  if (num.table() != den.table() && !(*num.table() == *den.table())) {
    throw TableMismatch("operands use different variable tables");
  }
  const auto& table = num.table();
  if (num.is_zero()) return LaurentPoly(table);

  if (den.is_monomial()) {
    const Term& d = den.terms().front();
    std::vector<Term> q;
    q.reserve(num.size());
    for (const auto& t : num.terms()) {
      if (!mpz_divisible_p(t.coef.get_mpz_t(), d.coef.get_mpz_t())) {
        throw NonExactDivision("coefficient not divisible by monomial divisor");
      }
      Term out{t.exps, t.coef / d.coef};
      for (std::size_t k = 0; k < out.exps.size(); ++k) out.exps[k] -= d.exps[k];
      q.push_back(std::move(out));
    }
    return LaurentPoly::from_terms(table, std::move(q));
  }

  // Factor out monomial content so both sides are honest polynomials with no
  // monomial factor in the divisor; then the Laurent quotient exists iff the
  // polynomial quotient does.
  const Exponents num_shift = min_exponents(num);
  const Exponents den_shift = min_exponents(den);
  const LaurentPoly divisor = den.shifted(negated(den_shift));
  const MonomialOrder order{table->cluster_size()};

  std::map<Exponents, Integer, MonomialOrder> rem(order);
  const LaurentPoly dividend = num.shifted(negated(num_shift));
  for (const auto& t : dividend.terms()) rem.emplace(t.exps, t.coef);

  const Term& lead = divisor.leading_term();
  std::vector<Term> quotient;
  Exponents q_exps(table->size(), 0);
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    for (std::size_t k = 0; k < q_exps.size(); ++k) {
      q_exps[k] = top->first[k] - lead.exps[k];
      if (q_exps[k] < 0) throw NonExactDivision("leading monomial not divisible");
    }
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead.coef.get_mpz_t())) {
      throw NonExactDivision("leading coefficient not divisible");
    }
    Integer q_coef = top->second / lead.coef;
    Exponents e(table->size(), 0);
    for (const auto& t : divisor.terms()) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = t.exps[k] + q_exps[k];
      auto [it, inserted] = rem.try_emplace(e);
      mpz_submul(it->second.get_mpz_t(), q_coef.get_mpz_t(), t.coef.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back(Term{q_exps, std::move(q_coef)});
  }

  Exponents back(table->size(), 0);
  for (std::size_t k = 0; k < back.size(); ++k) back[k] = num_shift[k] - den_shift[k];
  return LaurentPoly::from_terms(table, std::move(quotient)).shifted(back);
}

// ---------------------------------------------------------------------------
// Denominators, evaluation, display form

std::vector<std::int64_t> denominator_vector(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("denominator vector of the zero polynomial");
  const std::size_t n = p.table()->cluster_size();
  std::vector<std::int64_t> d(n);
  const auto m = min_exponents(p);
  for (std::size_t i = 0; i < n; ++i) d[i] = -static_cast<std::int64_t>(m[i]);
  return d;
}

Integer evaluate_at_ones(const LaurentPoly& p) {
  Integer s = 0;
  for (const auto& t : p.terms()) s += t.coef;
  return s;
}

LaurentPoly specialize(const LaurentPoly& p, const TablePtr& target) {
  const auto& source = *p.table();
  std::vector<std::optional<std::size_t>> map(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) map[i] = target->index_of(source.name(i));
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Exponents e(target->size(), 0);
    for (std::size_t i = 0; i < source.size(); ++i) {
      if (map[i]) e[*map[i]] += t.exps[i];
    }
    terms.push_back(Term{std::move(e), t.coef});
  }
  return LaurentPoly::from_terms(target, std::move(terms));
}

Fraction as_fraction(const LaurentPoly& p) {
  const auto& table = p.table();
  Exponents den(table->size(), 0);
  if (!p.is_zero()) {
    const auto d = denominator_vector(p);
    for (std::size_t i = 0; i < d.size(); ++i) den[i] = static_cast<std::int32_t>(std::max<std::int64_t>(d[i], 0));
  }
  return Fraction{p.shifted(den), den};
}

}  // namespace clusterlab
