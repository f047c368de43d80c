#pragma once

// Quiver builders, exhaustive/random quiver families and independent oracles
// shared by the unit tests and the acceptance suite.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "clusterlab/algebra.hpp"

namespace support {

using namespace clusterlab;

/// 1-based arrow list.
inline Quiver quiver(std::size_t n, std::initializer_list<std::pair<int, int>> arrows) {
  Quiver q(n);
  for (auto [a, b] : arrows) q.add_arrow(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
  return q;
}

inline Quiver oriented_triangle() { return quiver(3, {{1, 2}, {2, 3}, {3, 1}}); }
inline Quiver kronecker() { return quiver(2, {{1, 2}, {1, 2}}); }
/// 1 -> 2, 2 => 3, 3 -> 1: a double arrow with one attached triangle.
inline Quiver double_arrow_triangle() { return quiver(3, {{1, 2}, {2, 3}, {2, 3}, {3, 1}}); }
/// Double arrow 2 => 3 with triangles through 1 and 4.
inline Quiver double_arrow_two_triangles() { return quiver(4, {{1, 2}, {2, 3}, {2, 3}, {3, 1}, {3, 4}, {4, 2}}); }

inline LaurentPoly poly(const Seed& s, std::string_view text) { return parse_laurent(text, s.table()); }

/// Calls f on every quiver with n vertices whose multiplicities are <= max_mult.
inline void for_each_quiver(std::size_t n, int max_mult, const std::function<void(const Quiver&)>& f) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const int states = 2 * max_mult + 1;  // 0, i->j x1..m, j->i x1..m
  std::vector<int> digit(pairs.size(), 0);
  while (true) {
    Quiver q(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const int d = digit[p];
      if (d == 0) continue;
      if (d <= max_mult) {
        q.add_arrow(pairs[p].first, pairs[p].second, d);
      } else {
        q.add_arrow(pairs[p].second, pairs[p].first, d - max_mult);
      }
    }
    f(q);
    std::size_t p = 0;
    while (p < digit.size() && ++digit[p] == states) digit[p++] = 0;
    if (p == digit.size()) break;
  }
}

/// Connected quivers up to isomorphism (canonical representatives).
inline std::vector<Quiver> connected_up_to_iso(std::size_t n, int max_mult) {
  std::set<Quiver> seen;
  for_each_quiver(n, max_mult, [&](const Quiver& q) {
    if (q.is_connected()) seen.insert(canonical_form(q));
  });
  return {seen.begin(), seen.end()};
}

inline Quiver random_quiver(std::mt19937_64& rng, std::size_t n, int max_mult, double density = 0.6) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> mult(1, max_mult);
  Quiver q(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng) > density) continue;
      if (coin(rng) < 0.5) {
        q.add_arrow(i, j, mult(rng));
      } else {
        q.add_arrow(j, i, mult(rng));
      }
    }
  }
  return q;
}

/// Acyclic: arrows follow a random linear order of the vertices.
inline Quiver random_acyclic_quiver(std::mt19937_64& rng, std::size_t n, int max_mult, double density = 0.6) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> mult(1, max_mult);
  Quiver q(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng) <= density) q.add_arrow(perm[b], perm[a], mult(rng));
    }
  }
  return q;
}

inline MutationSequence random_sequence(std::mt19937_64& rng, std::size_t n, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), vertex(0, n - 1);
  MutationSequence seq(len(rng));
  for (auto& k : seq) k = vertex(rng);
  return seq;
}

/// Largest arrow multiplicity at the mutated vertex over the steps of seq.
/// Random families use it to stay away from wild growth, where a single
/// exchange raises a polynomial to a power in the hundreds.
inline int max_exchange_multiplicity(Quiver q, const MutationSequence& seq) {
  int worst = 0;
  for (std::size_t k : seq) {
    for (std::size_t i = 0; i < q.size(); ++i) worst = std::max({worst, q.multiplicity(i, k), q.multiplicity(k, i)});
    q = q.mutate(k);
  }
  return worst;
}

/// Dimension vectors by explicit enumeration of directed paths (DFS).
inline std::vector<std::vector<std::int64_t>> path_counts(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(n, 0));
  std::function<void(std::size_t, std::size_t, std::int64_t)> walk = [&](std::size_t start, std::size_t v, std::int64_t ways) {
    out[start][v] += ways;
    for (std::size_t w = 0; w < n; ++w) {
      if (int m = q.multiplicity(v, w); m > 0) walk(start, w, ways * m);
    }
  };
  for (std::size_t i = 0; i < n; ++i) walk(i, i, 1);
  return out;
}

inline bool is_path_orientation(const Quiver& q) {
  const std::size_t n = q.size();
  if (q.max_multiplicity() > 1 || q.arrow_count() + 1 != n || !q.is_connected()) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (q.neighbors(v).size() > 2) return false;
  }
  return true;
}

inline bool is_non_oriented_cycle(const Quiver& q) {
  const std::size_t n = q.size();
  if (n == 2) return q.max_multiplicity() == 2 && q.arrow_count() == 2;
  if (n < 3 || q.max_multiplicity() > 1 || q.arrow_count() != n || !q.is_connected()) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (q.neighbors(v).size() != 2) return false;
  }
  std::vector<int> out(n, 0);
  for (const auto& [a, b, m] : q.arrows()) out[a] += m;
  return !std::all_of(out.begin(), out.end(), [](int d) { return d == 1; });
}

/// Ground truth for the classifiers: explores the mutation class up to
/// isomorphism. A class holding a multiplicity above 2 is neither type.
class MutationClassOracle {
 public:
  struct Answer {
    bool type_a = false;
    bool type_atilde = false;
  };

  Answer operator()(const Quiver& q) {
    const Quiver root = canonical_form(q);
    if (auto it = memo_.find(root); it != memo_.end()) return it->second;
    Answer ans;
    std::set<Quiver> seen{root};
    std::deque<Quiver> queue{root};
    bool wild = false;
    while (!queue.empty() && !wild) {
      Quiver cur = queue.front();
      queue.pop_front();
      if (cur.max_multiplicity() > 2) {
        wild = true;
        break;
      }
      ans.type_a = ans.type_a || is_path_orientation(cur);
      ans.type_atilde = ans.type_atilde || is_non_oriented_cycle(cur);
      for (std::size_t k = 0; k < cur.size(); ++k) {
        Quiver next = canonical_form(cur.mutate(k));
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
    if (wild) ans = Answer{};
    for (const auto& member : seen) memo_[member] = ans;
    return ans;
  }

 private:
  std::map<Quiver, Answer> memo_;
};

}  // namespace support
