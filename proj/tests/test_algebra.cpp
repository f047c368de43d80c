#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace clusterlab;
using support::poly;
using support::quiver;

namespace {

// Dense fraction-free (Bareiss) elimination over the integers.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<linalg::SparseVector> to_sparse(const std::vector<std::vector<mpz_class>>& a) {
  std::vector<linalg::SparseVector> out;
  for (const auto& row : a) {
    linalg::SparseVector v;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != 0) v.push_back({static_cast<std::uint32_t>(c), row[c]});
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t brute_standard_count(std::size_t n, unsigned bound) {
  std::size_t count = 0;
  std::vector<unsigned> e(2 * n, 0);
  while (true) {
    unsigned total = 0;
    bool standard = true;
    for (unsigned v : e) total += v;
    for (std::size_t i = 0; i < n; ++i) standard = standard && (e[i] == 0 || e[n + i] == 0);
    if (total <= bound && standard) ++count;
    std::size_t p = 0;
    while (p < e.size() && ++e[p] > bound) e[p++] = 0;
    if (p == e.size()) break;
  }
  return count;
}

LaurentPoly expand_by_hand(const MembershipCertificate& c, const GeneratorSet& g) {
  LaurentPoly sum(g.table());
  for (const auto& [m, coef] : c.terms) {
    REQUIRE(coef.get_den() == 1);
    LaurentPoly term = LaurentPoly::constant(g.table(), coef.get_num());
    for (std::size_t s = 0; s < m.size(); ++s) term *= g.generator(s).pow(m[s]);
    sum += term;
  }
  return sum;
}

// Monomial valuation in the coordinates (x1, x2, u = x2 + x3, x4) with weights
// (2, 0, 1, 0). It satisfies v(fg) = v(f) + v(g) and v(f + g) >= min, so an
// element of negative value cannot be a polynomial in generators of value >= 0.
long valuation(const LaurentPoly& p) {
  const Fraction f = as_fraction(p);
  const TablePtr t = VariableTable::cluster(4);  // slots: x1, x2, u, x4
  const LaurentPoly x3 = LaurentPoly::variable(t, 2) - LaurentPoly::variable(t, 1);
  LaurentPoly sub(t);
  for (const auto& term : f.numerator.terms()) {
    LaurentPoly m = LaurentPoly::constant(t, term.coef);
    m *= LaurentPoly::variable(t, 0).pow(term.exps[0]) * LaurentPoly::variable(t, 1).pow(term.exps[1]) *
         x3.pow(term.exps[2]) * LaurentPoly::variable(t, 3).pow(term.exps[3]);
    sub += m;
  }
  long best = std::numeric_limits<long>::max();
  for (const auto& term : sub.terms()) best = std::min<long>(best, 2 * term.exps[0] + term.exps[2]);
  return best - 2 * f.denominator[0];
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("generator sets") {
    const Seed s = Seed::initial(quiver(2, {{2, 1}}), CoefficientMode::Free);
    const GeneratorSet lp = lp_generators(s);
    CHECK(lp.kind == GeneratorSet::Kind::Projective);
    CHECK(lp.x == std::vector<LaurentPoly>{poly(s, "x1"), poly(s, "x2")});
    CHECK(lp.g == std::vector<LaurentPoly>{poly(s, "(1 + x2)/x1"), poly(s, "(1 + x1 + x2)/(x1*x2)")});
    const GeneratorSet l = l_generators(s);
    CHECK(l.g == std::vector<LaurentPoly>{poly(s, "(1 + x2)/x1"), poly(s, "(1 + x1)/x2")});
    const Seed one = Seed::initial(Quiver(1), CoefficientMode::Free);
    CHECK(l_generators(one).g[0] == poly(one, "2/x1"));
    const Seed tri = Seed::initial(support::oriented_triangle(), CoefficientMode::Free);
    CHECK(lp_generators(tri).g == projectives_general(tri).values);
    const Seed path = Seed::initial(quiver(3, {{1, 2}, {2, 3}}), CoefficientMode::Free);
    CHECK(lp_generators(path).g == projectives_acyclic(path).values);
    CHECK(lp.symbol_name(0) == "x1");
    CHECK(lp.symbol_name(3) == "g2");
  }

  TEST_CASE("standard monomial counts") {
    CHECK(standard_monomials(1, 2).size() == 5);
    CHECK(standard_monomials(2, 1).size() == 5);
    CHECK(standard_monomials(2, 2).size() == 13);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (unsigned d = 0; d <= 4; ++d) CHECK(standard_monomials(n, d).size() == brute_standard_count(n, d));
    }
    for (const auto& m : standard_monomials(3, 3)) CHECK(is_standard(m));
    const auto ms = standard_monomials(2, 3);
    CHECK(std::is_sorted(ms.begin(), ms.end(), [](const auto& a, const auto& b) { return degree(a) < degree(b); }));
  }

  TEST_CASE("rank examples") {
    const TablePtr t = VariableTable::cluster(2);
    const auto x1 = LaurentPoly::variable(t, 0), x2 = LaurentPoly::variable(t, 1);
    CHECK(rank_over_rationals({x1, x1.scaled(2)}) == 1);
    CHECK(rank_over_rationals({x1 + x2, x1, x2}) == 2);
    CHECK(rank_over_rationals({}) == 0);
  }

  TEST_CASE("sparse ranks agree with dense Bareiss elimination") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> entry(-3, 3), sparse(0, 2), dim(1, 9);
    for (int i = 0; i < 300; ++i) {
      const int rows = dim(rng), cols = dim(rng);
      std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
      for (auto& row : a) {
        for (auto& v : row) v = sparse(rng) ? 0 : entry(rng);
      }
      if (i % 3 == 0 && rows > 2) a[rows - 1] = a[0];  // force dependence
      const std::size_t want = bareiss_rank(a);
      const auto rows_sparse = to_sparse(a);
      REQUIRE(linalg::rank(rows_sparse) == want);
      REQUIRE(linalg::rank_exact(rows_sparse) == want);
      REQUIRE(linalg::rank_mod_p(rows_sparse) <= want);
    }
  }

  TEST_CASE("echelon reduction returns a valid combination") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int i = 0; i < 100; ++i) {
      std::vector<std::vector<mpz_class>> a(5, std::vector<mpz_class>(7));
      for (auto& row : a) {
        for (auto& v : row) v = entry(rng);
      }
      const auto rows = to_sparse(a);
      linalg::EchelonBasis basis;
      for (std::uint32_t r = 0; r < rows.size(); ++r) basis.insert(rows[r], {{r, 1}});
      std::vector<mpz_class> target(7, 0);
      std::vector<mpz_class> weights = {entry(rng), entry(rng), 0, entry(rng), entry(rng)};
      for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c = 0; c < 7; ++c) target[c] += weights[r] * a[r][c];
      }
      const auto red = basis.reduce(to_sparse({target})[0]);
      REQUIRE(red.in_span);
      std::vector<mpz_class> lhs(7, 0), rhs(7, 0);
      for (std::size_t c = 0; c < 7; ++c) lhs[c] = red.scale * target[c];
      for (const auto& e : red.combo) {
        for (std::size_t c = 0; c < 7; ++c) rhs[c] += e.value * a[e.column][c];
      }
      REQUIRE(lhs == rhs);
    }
  }

  TEST_CASE("standard monomials are independent for acyclic seeds") {
    const Seed s = Seed::initial(quiver(2, {{2, 1}}), CoefficientMode::Free);
    const GeneratorSet lp = lp_generators(s);
    std::vector<LaurentPoly> polys;
    for (const auto& m : standard_monomials(lp, 3)) polys.push_back(expand(m, lp));
    CHECK(rank_over_rationals(polys) == polys.size());
    CHECK(standard_monomial_rank(lp, 3).full());
  }

  TEST_CASE("lower bound generators of the 3-cycle are dependent") {
    const Seed tri = Seed::initial(support::oriented_triangle(), CoefficientMode::Free);
    const GeneratorSet l = l_generators(tri);
    // x1 x1' - x2 x2' = x2 - x1
    const LaurentPoly rel = l.x[0] * l.g[0] - l.x[1] * l.g[1] - l.x[1] + l.x[0];
    CHECK(rel.is_zero());
    CHECK_FALSE(standard_monomial_rank(l, 3).full());
    CHECK(standard_monomial_rank(lp_generators(tri), 4).full());
  }

  TEST_CASE("membership certificates") {
    const Seed tri = Seed::initial(support::oriented_triangle(), CoefficientMode::Free);
    const GeneratorSet lp = lp_generators(tri);
    const auto adj = tri.adjacent_variables();
    const auto c1 = membership(adj[0].value, lp, 4);
    REQUIRE(c1);
    CHECK(c1->to_string(lp) == "x2*g1 - 1");
    CHECK(c1->integral());
    CHECK(c1->degree() == 2);
    CHECK(expand_by_hand(*c1, lp) == adj[0].value);

    const auto cx = membership(tri.variable(0), lp, 2);
    REQUIRE(cx);
    CHECK(cx->to_string(lp) == "x1");

    const Seed da = Seed::initial(support::double_arrow_triangle(), CoefficientMode::Free);
    const GeneratorSet lpd = lp_generators(da);
    const auto c3 = membership(poly(da, "(x2 + x3)/x1"), lpd, 4);
    REQUIRE(c3);
    CHECK(c3->to_string(lpd) == "x2*g1 - g3");
    CHECK(expand_by_hand(*c3, lpd) == poly(da, "(x2 + x3)/x1"));

    CHECK_FALSE(membership(poly(tri, "1/x1"), lp, 5));
  }

  TEST_CASE("certificates are stable as the bound grows") {
    const Seed s = Seed::initial(quiver(3, {{1, 2}, {3, 2}}), CoefficientMode::Free);
    MembershipSolver solver(lp_generators(s));
    for (const auto& v : enumerate_cluster_variables(s).variables) {
      const auto low = solver.solve(v.value, 4);
      const auto high = solver.solve(v.value, 6);
      REQUIRE(low);
      REQUIRE(high);
      REQUIRE(low->to_string(solver.generators()) == high->to_string(solver.generators()));
      REQUIRE(expand_by_hand(*high, solver.generators()) == v.value);
    }
  }

  TEST_CASE("symbolic generator sets are rejected by the solver") {
    const Seed sym = Seed::initial(quiver(2, {{2, 1}}), CoefficientMode::Symbolic);
    CHECK_THROWS_AS(membership(sym.variable(0), lp_generators(sym), 2), TableMismatch);
  }

  TEST_CASE("finite type closure") {
    const Seed a2 = Seed::initial(quiver(2, {{2, 1}}), CoefficientMode::Free);
    const auto r2 = enumerate_cluster_variables(a2);
    CHECK(r2.closed);
    CHECK(r2.variables.size() == 5);
    CHECK(std::is_sorted(r2.variables.begin(), r2.variables.end(),
                         [](const ClusterVariable& a, const ClusterVariable& b) { return a.value < b.value; }));
    // every orientation of A_n has n(n+3)/2 cluster variables
    for (std::size_t n = 3; n <= 4; ++n) {
      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Quiver q(n);
        for (std::size_t i = 0; i + 1 < n; ++i) {
          if (mask >> i & 1) {
            q.add_arrow(i, i + 1);
          } else {
            q.add_arrow(i + 1, i);
          }
        }
        const auto r = enumerate_cluster_variables(Seed::initial(q, CoefficientMode::Free));
        CHECK(r.closed);
        CHECK(r.variables.size() == n * (n + 3) / 2);
      }
    }
    const auto tri = enumerate_cluster_variables(Seed::initial(support::oriented_triangle(), CoefficientMode::Free));
    CHECK(tri.variables.size() == 9);
    const auto k = enumerate_cluster_variables(Seed::initial(support::kronecker(), CoefficientMode::Free));
    CHECK_FALSE(k.closed);
    CHECK(k.degree_cap_hit);
    const auto small = enumerate_cluster_variables(Seed::initial(support::kronecker(), CoefficientMode::Free), 3, 100);
    CHECK(small.seed_cap_hit);
    CHECK_FALSE(small.closed);
  }

  TEST_CASE("closure matches an exchange-graph walk keyed by text") {
    for (const Quiver& q : {support::oriented_triangle(), quiver(4, {{1, 2}, {2, 3}, {3, 4}}), quiver(4, {{1, 2}, {2, 3}, {3, 1}, {3, 4}})}) {
      const Seed s = Seed::initial(q, CoefficientMode::Free);
      std::set<std::set<std::string>> clusters;
      std::set<std::string> variables;
      std::vector<Seed> stack{s};
      while (!stack.empty()) {
        const Seed cur = stack.back();
        stack.pop_back();
        std::set<std::string> key;
        for (const auto& v : cur.cluster()) key.insert(to_string(v));
        if (!clusters.insert(key).second) continue;
        variables.insert(key.begin(), key.end());
        for (std::size_t k = 0; k < q.size(); ++k) stack.push_back(cur.mutate(k));
      }
      std::set<std::string> found;
      for (const auto& v : enumerate_cluster_variables(s).variables) found.insert(to_string(v.value));
      CHECK(found == variables);
    }
  }

  TEST_CASE("variables within a radius") {
    const Seed tri = Seed::initial(support::oriented_triangle(), CoefficientMode::Free);
    CHECK(variables_within_radius(tri, 0).size() == 3);
    const auto r1 = variables_within_radius(tri, 1);
    CHECK(r1.size() == 6);
    CHECK(r1[3].value == tri.adjacent_variables()[0].value);
    CHECK(r1[3].history == MutationSequence{0});
  }

  TEST_CASE("verification driver") {
    const Seed tri = Seed::initial(support::oriented_triangle(), CoefficientMode::Free);
    VerifyCaps caps;
    caps.degree_bound = 4;
    const VerifyReport r = verify_lp_equals_a(tri, caps);
    CHECK(r.scope == VerifyReport::Scope::Closure);
    CHECK(r.all_certified());
    CHECK(r.entries.size() == 9);
    CHECK(r.count(VerifyEntry::Status::Certified) == 3);
    CHECK(r.count(VerifyEntry::Status::Generator) == 6);
    for (const auto& e : r.entries) {
      if (e.certificate) CHECK(expand_by_hand(*e.certificate, r.generators) == e.variable.value);
    }
    CHECK(verify_lp_equals_a(Seed::initial(quiver(2, {{2, 1}}), CoefficientMode::Free)).all_certified());
    const VerifyReport da = verify_lp_equals_a(Seed::initial(support::double_arrow_triangle(), CoefficientMode::Free), caps);
    CHECK(da.scope == VerifyReport::Scope::Radius);
  }

  TEST_CASE("a radius-one variable of the two-triangle double-arrow quiver lies outside L_P") {
    const Seed s = Seed::initial(support::double_arrow_two_triangles(), CoefficientMode::Free);
    const GeneratorSet lp = lp_generators(s);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(valuation(lp.x[i]) >= 0);
      CHECK(valuation(lp.g[i]) >= 0);
    }
    const LaurentPoly x1p = s.adjacent_variables()[0].value;
    CHECK(x1p == poly(s, "(x3 + x2)/x1"));
    CHECK(valuation(x1p) < 0);
    CHECK_FALSE(membership(x1p, lp, 6));

    VerifyCaps caps;
    caps.degree_bound = 6;
    caps.radius = 4;
    const VerifyReport r = verify_lp_equals_a(s, caps);
    CHECK_FALSE(r.all_certified());
    for (const auto& e : r.entries) {
      if (valuation(e.variable.value) < 0) CHECK(e.status == VerifyEntry::Status::NotFoundUpToBound);
    }
  }

  TEST_CASE("denominator degree") {
    const TablePtr t = VariableTable::cluster(3);
    CHECK(denominator_degree(parse_laurent("(x1 + x2 + x3)/(x1*x2)", t)) == 2);
    CHECK(denominator_degree(parse_laurent("x1", t)) == 0);
  }
}
