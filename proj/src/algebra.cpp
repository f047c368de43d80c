#include "clusterlab/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "exponent_hash.hpp"

namespace clusterlab {

std::string GeneratorSet::symbol_name(std::size_t symbol) const {
  const std::size_t n = x.size();
  return (symbol < n ? "x" : "g") + std::to_string((symbol < n ? symbol : symbol - n) + 1);
}

GeneratorSet lp_generators(const Seed& seed, std::size_t max_depth) {
  return GeneratorSet{GeneratorSet::Kind::Projective, seed.cluster(), projectives_general(seed, max_depth).values};
}

GeneratorSet l_generators(const Seed& seed) {
  GeneratorSet gens{GeneratorSet::Kind::Lower, seed.cluster(), {}};
  for (auto& v : seed.adjacent_variables()) gens.g.push_back(std::move(v.value));
  return gens;
}

bool is_standard(const GeneratorMonomial& m) {
  const std::size_t n = m.size() / 2;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] != 0 && m[i + n] != 0) return false;
  }
  return true;
}

unsigned degree(const GeneratorMonomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

namespace {

// Exact degree d, lexicographically descending.
void monomials_of_degree(std::size_t symbols, unsigned d, std::vector<GeneratorMonomial>& out) {
  GeneratorMonomial m(symbols, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == symbols) {
      m[pos] = left;
      out.push_back(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m[pos] = e;
      self(self, pos + 1, left - e);
    }
    m[pos] = 0;
  };
  if (symbols == 0) {
    if (d == 0) out.push_back(m);
    return;
  }
  rec(rec, 0, d);
}

std::size_t last_nonzero(const GeneratorMonomial& m) {
  std::size_t j = m.size();
  while (j-- > 0) {
    if (m[j] != 0) return j;
  }
  return m.size();
}

}  // namespace

std::vector<GeneratorMonomial> standard_monomials(std::size_t n, unsigned bound) {
  std::vector<GeneratorMonomial> out;
  for (unsigned d = 0; d <= bound; ++d) {
    std::vector<GeneratorMonomial> layer;
    monomials_of_degree(2 * n, d, layer);
    for (auto& m : layer) {
      if (is_standard(m)) out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<GeneratorMonomial> standard_monomials(const GeneratorSet& gens, unsigned bound) {
  return standard_monomials(gens.rank(), bound);
}

LaurentPoly expand(const GeneratorMonomial& m, const GeneratorSet& gens) {
  LaurentPoly out = LaurentPoly::constant(gens.table(), 1);
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (m[s] != 0) out *= gens.generator(s).pow(m[s]);
  }
  return out;
}

std::size_t ExponentsHasher::operator()(const Exponents& e) const noexcept { return detail::ExponentHash{}(e); }

namespace {

class ColumnInterner {
 public:
  linalg::SparseVector row(const LaurentPoly& p) {
    linalg::SparseVector out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      auto [it, fresh] = ids_.try_emplace(t.exps, static_cast<std::uint32_t>(ids_.size()));
      out.push_back({it->second, t.coef});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.column < b.column; });
    return out;
  }

 private:
  std::unordered_map<Exponents, std::uint32_t, ExponentsHasher> ids_;
};

}  // namespace

std::size_t rank_over_rationals(const std::vector<LaurentPoly>& polys) {
  ColumnInterner columns;
  std::vector<linalg::SparseVector> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) {
    if (!polys.empty() && !(*p.table() == *polys.front().table())) {
      throw TableMismatch("rank_over_rationals: polynomials over different tables");
    }
    rows.push_back(columns.row(p));
  }
  return linalg::rank(rows);
}

RankReport standard_monomial_rank(const GeneratorSet& gens, unsigned bound) {
  const auto monomials = standard_monomials(gens, bound);
  std::map<GeneratorMonomial, LaurentPoly> cache;
  std::vector<LaurentPoly> polys;
  polys.reserve(monomials.size());
  for (const auto& m : monomials) {
    const std::size_t j = last_nonzero(m);
    if (j == m.size()) {
      polys.push_back(LaurentPoly::constant(gens.table(), 1));
    } else {
      // Dropping a factor keeps a monomial standard, so the parent is cached.
      GeneratorMonomial parent = m;
      --parent[j];
      polys.push_back(cache.at(parent) * gens.generator(j));
    }
    cache.emplace(m, polys.back());
  }
  return RankReport{bound, monomials.size(), rank_over_rationals(polys)};
}

bool MembershipCertificate::integral() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

unsigned MembershipCertificate::degree() const {
  unsigned d = 0;
  for (const auto& t : terms) d = std::max(d, clusterlab::degree(t.first));
  return d;
}

bool MembershipCertificate::verify(const LaurentPoly& target, const GeneratorSet& gens) const {
  Integer lcm = 1;
  for (const auto& t : terms) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.second.get_den_mpz_t());
  LaurentPoly sum(target.table());
  for (const auto& [m, c] : terms) {
    const Integer scaled = c.get_num() * (lcm / c.get_den());
    sum += expand(m, gens).scaled(scaled);
  }
  return sum == target.scaled(lcm);
}

std::string MembershipCertificate::to_string(const GeneratorSet& gens) const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    std::string mono;
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (m[s] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += gens.symbol_name(s);
      if (m[s] > 1) mono += '^' + std::to_string(m[s]);
    }
    const Rational a = abs(c);
    std::string body;
    if (mono.empty()) {
      body = a.get_str();
    } else if (a == 1) {
      body = mono;
    } else {
      body = a.get_str() + '*' + mono;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

MembershipSolver::MembershipSolver(GeneratorSet gens) : gens_(std::move(gens)), basis_(true) {
  if (gens_.x.empty() || gens_.x.size() != gens_.g.size()) {
    throw InvalidQuiver("generator set needs n x-generators and n g-generators, n >= 1");
  }
  if (gens_.table()->has_coefficients()) {
    throw TableMismatch("membership is solved over Q and needs a coefficient-free table");
  }
}

std::optional<linalg::SparseVector> MembershipSolver::to_row(const LaurentPoly& p, bool intern) {
  linalg::SparseVector out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    auto it = columns_.find(t.exps);
    if (it == columns_.end()) {
      if (!intern) return std::nullopt;
      it = columns_.emplace(t.exps, static_cast<std::uint32_t>(columns_.size())).first;
    }
    out.push_back({it->second, t.coef});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.column < b.column; });
  return out;
}

void MembershipSolver::extend() {
  const unsigned d = started_ ? reached_ + 1 : 0;
  std::vector<GeneratorMonomial> layer;
  monomials_of_degree(gens_.size(), d, layer);
  std::stable_partition(layer.begin(), layer.end(), [](const auto& m) { return is_standard(m); });

  std::map<GeneratorMonomial, LaurentPoly> next;
  for (auto& m : layer) {
    const std::size_t j = last_nonzero(m);
    LaurentPoly value = LaurentPoly::constant(gens_.table(), 1);
    if (j != m.size()) {
      GeneratorMonomial parent = m;
      --parent[j];
      value = layer_.at(parent) * gens_.generator(j);
    }
    const auto id = static_cast<std::uint32_t>(monomials_.size());
    monomials_.push_back(m);
    basis_.insert(*to_row(value, true), linalg::SparseVector{{id, Integer(1)}});
    next.emplace(std::move(m), std::move(value));
  }
  layer_ = std::move(next);
  reached_ = d;
  started_ = true;
}

std::optional<MembershipCertificate> MembershipSolver::solve(const LaurentPoly& target, unsigned bound) {
  if (!(*target.table() == *gens_.table())) throw TableMismatch("target and generators use different tables");
  if (!started_) extend();
  while (true) {
    if (auto row = to_row(target, false)) {
      auto r = basis_.reduce(std::move(*row));
      if (r.in_span) {
        MembershipCertificate cert;
        for (const auto& e : r.combo) {
          Rational c(e.value, r.scale);
          c.canonicalize();
          cert.terms.emplace_back(monomials_[e.column], c);
        }
        std::sort(cert.terms.begin(), cert.terms.end(), [](const auto& a, const auto& b) {
          const unsigned da = clusterlab::degree(a.first), db = clusterlab::degree(b.first);
          if (da != db) return da > db;
          return a.first > b.first;
        });
        // The representation over the basis is unique, so a certificate above
        // the bound means there is none within it.
        if (cert.degree() > bound) return std::nullopt;
        return cert;
      }
    }
    if (reached_ >= bound) return std::nullopt;
    extend();
  }
}

std::optional<MembershipCertificate> membership(const LaurentPoly& target, const GeneratorSet& gens, unsigned bound) {
  MembershipSolver solver(gens);
  return solver.solve(target, bound);
}

}  // namespace clusterlab
