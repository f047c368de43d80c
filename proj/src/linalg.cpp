#include "clusterlab/linalg.hpp"

#include <algorithm>

namespace clusterlab::linalg {

SparseVector combine(const Integer& beta, const SparseVector& x, const Integer& alpha, const SparseVector& y) {
  SparseVector out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  Integer v;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].column < y[j].column)) {
      v = beta * x[i].value;
      out.push_back({x[i++].column, v});
    } else if (i == x.size() || y[j].column < x[i].column) {
      v = -alpha * y[j].value;
      out.push_back({y[j++].column, v});
    } else {
      v = beta * x[i].value;
      mpz_submul(v.get_mpz_t(), alpha.get_mpz_t(), y[j].value.get_mpz_t());
      if (v != 0) out.push_back({x[i].column, v});
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

void divide_content(SparseVector& a, SparseVector& b, Integer* scale) {
  Integer g = 0;
  for (const auto* vec : {&a, &b}) {
    for (const auto& e : *vec) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
      if (g == 1) return;
    }
  }
  if (scale) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scale->get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto* vec : {&a, &b}) {
    for (auto& e : *vec) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
  }
  if (scale) mpz_divexact(scale->get_mpz_t(), scale->get_mpz_t(), g.get_mpz_t());
}

}  // namespace

void EchelonBasis::eliminate(SparseVector& vec, SparseVector& combo, Integer& scale) const {
  Integer g, alpha, beta;
  while (!vec.empty()) {
    auto it = pivot_row_.find(vec.front().column);
    if (it == pivot_row_.end()) return;
    const Row& row = rows_[it->second];
    const Integer& a = vec.front().value;
    const Integer& b = row.values.front().value;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(alpha.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(beta.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    vec = combine(beta, vec, alpha, row.values);
    if (track_) {
      combo = combine(beta, combo, alpha, row.combo);
      scale *= beta;
      divide_content(vec, combo, &scale);
    } else {
      divide_content(vec, combo, nullptr);
    }
  }
}

bool EchelonBasis::insert(SparseVector row, SparseVector combo) {
  Integer scale = 1;
  eliminate(row, combo, scale);
  if (row.empty()) return false;
  if (!track_) combo.clear();
  divide_content(row, combo, nullptr);
  pivot_row_.emplace(row.front().column, rows_.size());
  rows_.push_back(Row{std::move(row), std::move(combo)});
  return true;
}

EchelonBasis::Reduction EchelonBasis::reduce(SparseVector target) const {
  Reduction r;
  eliminate(target, r.combo, r.scale);
  // Invariant during elimination: vec = scale * target + sum combo_m * input_m.
  r.in_span = target.empty();
  if (!r.in_span) {
    r.combo.clear();
  } else {
    for (auto& e : r.combo) e.value = -e.value;
  }
  return r;
}

std::size_t rank_exact(const std::vector<SparseVector>& rows) {
  EchelonBasis basis(false);
  for (const auto& row : rows) basis.insert(row);
  return basis.rank();
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kPrime) s -= kPrime;
  return s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mod(const Integer& v) {
  return mpz_fdiv_ui(v.get_mpz_t(), kPrime);
}

using ModVector = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

}  // namespace

std::size_t rank_mod_p(const std::vector<SparseVector>& rows) {
  std::vector<ModVector> basis;
  std::unordered_map<std::uint32_t, std::size_t> pivot;
  for (const auto& row : rows) {
    ModVector v;
    v.reserve(row.size());
    for (const auto& e : row) {
      const auto m = reduce_mod(e.value);
      if (m != 0) v.emplace_back(e.column, m);
    }
    while (!v.empty()) {
      auto it = pivot.find(v.front().first);
      if (it == pivot.end()) break;
      const ModVector& b = basis[it->second];  // normalized: leading value 1
      const std::uint64_t factor = v.front().second;
      ModVector out;
      out.reserve(v.size() + b.size());
      std::size_t i = 0, j = 0;
      while (i < v.size() || j < b.size()) {
        if (j == b.size() || (i < v.size() && v[i].first < b[j].first)) {
          out.push_back(v[i++]);
        } else {
          const std::uint64_t sub = mulmod(factor, b[j].second);
          std::uint64_t val;
          std::uint32_t col = b[j].first;
          if (i < v.size() && v[i].first == col) {
            val = v[i].second >= sub ? v[i].second - sub : v[i].second + kPrime - sub;
            ++i;
          } else {
            val = sub == 0 ? 0 : kPrime - sub;
          }
          ++j;
          if (val != 0) out.emplace_back(col, val);
        }
      }
      v = std::move(out);
    }
    if (v.empty()) continue;
    const std::uint64_t inv = powmod(v.front().second, kPrime - 2);
    for (auto& e : v) e.second = mulmod(e.second, inv);
    pivot.emplace(v.front().first, basis.size());
    basis.push_back(std::move(v));
  }
  return basis.size();
}

std::size_t rank(const std::vector<SparseVector>& rows) {
  if (rank_mod_p(rows) == rows.size()) return rows.size();
  return rank_exact(rows);
}

}  // namespace clusterlab::linalg
