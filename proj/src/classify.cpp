// Structural recognition of the mutation classes of A_n (the class Q_n:
// oriented triangles only, bounded vertex degree, triangle-incidence rules)
// and Ã_n (one chordless non-oriented cycle with type-A quivers glued on
// along oriented triangles).

#include <algorithm>
#include <functional>
#include <set>

#include "clusterlab/quiver.hpp"

namespace clusterlab {

namespace {

void require_connected(const Quiver& q) {
  if (!q.is_connected()) throw Disconnected("classifier requires a connected quiver");
}

bool oriented_triangle(const Quiver& q, std::size_t a, std::size_t b, std::size_t c) {
  const auto arrow = [&](std::size_t u, std::size_t v) { return q.multiplicity(u, v) > 0; };
  return (arrow(a, b) && arrow(b, c) && arrow(c, a)) || (arrow(b, a) && arrow(c, b) && arrow(a, c));
}

// True if the underlying simple graph has a simple cycle of length >= 4.
bool has_long_cycle(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<bool> on_path(n, false);
  std::function<bool(std::size_t, std::size_t, std::size_t)> dfs =
      [&](std::size_t start, std::size_t v, std::size_t length) -> bool {
    for (std::size_t u = start + 1; u < n; ++u) {
      if (!q.adjacent(v, u) || on_path[u]) continue;
      on_path[u] = true;
      if (length + 1 >= 4 && q.adjacent(u, start)) return true;
      if (dfs(start, u, length + 1)) return true;
      on_path[u] = false;
    }
    return false;
  };
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[s] = true;
    if (dfs(s, s, 1)) return true;
  }
  return false;
}

bool type_A_conditions(const Quiver& q) {
  const std::size_t n = q.size();
  if (n <= 1) return true;
  if (q.max_multiplicity() > 1) return false;  // a double arrow is a non-oriented 2-cycle
  if (has_long_cycle(q)) return false;
  // Every remaining cycle is a triangle; all must be oriented.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!q.adjacent(a, b)) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (q.adjacent(b, c) && q.adjacent(a, c) && !oriented_triangle(q, a, b, c)) return false;
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto nb = q.neighbors(v);
    if (nb.size() > 4) return false;
    if (nb.size() == 4) {
      // The four neighbours must split into two adjacent pairs.
      const auto paired = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return q.adjacent(nb[i], nb[j]) && q.adjacent(nb[k], nb[l]);
      };
      if (!paired(0, 1, 2, 3) && !paired(0, 2, 1, 3) && !paired(0, 3, 1, 2)) return false;
    } else if (nb.size() == 3) {
      std::size_t edges = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) edges += q.adjacent(nb[i], nb[j]) ? 1 : 0;
      }
      // Exactly one adjacent pair; the third neighbour then lies on no triangle through v.
      if (edges != 1) return false;
    }
  }
  return true;
}

// Chordless cycles of length >= 3 in the underlying graph whose arrows all
// have multiplicity one and which are not oriented. Each cycle is returned
// once, as a vertex list in traversal order.
std::vector<std::vector<std::size_t>> non_oriented_chordless_cycles(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);

  const auto accept_cycle = [&](const std::vector<std::size_t>& cycle) {
    const std::size_t len = cycle.size();
    std::size_t forward = 0;
    for (std::size_t i = 0; i < len; ++i) {
      const auto a = cycle[i];
      const auto b = cycle[(i + 1) % len];
      if (q.multiplicity(a, b) + q.multiplicity(b, a) != 1) return;
      forward += q.multiplicity(a, b) > 0 ? 1 : 0;
    }
    if (forward == 0 || forward == len) return;  // oriented
    out.push_back(cycle);
  };

  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    const std::size_t v = path.back();
    for (std::size_t u = start + 1; u < n; ++u) {
      if (on_path[u] || !q.adjacent(v, u)) continue;
      // Chordless: u may touch only v among interior path vertices, and
      // touches start only if it closes the cycle.
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (q.adjacent(path[i], u)) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      path.push_back(u);
      on_path[u] = true;
      if (path.size() >= 3 && q.adjacent(u, start)) {
        if (path[1] < path.back()) accept_cycle(path);
      } else {
        extend(start);
      }
      on_path[u] = false;
      path.pop_back();
    }
  };

  for (std::size_t s = 0; s < n; ++s) {
    path.assign(1, s);
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[s] = true;
    extend(s);
  }
  return out;
}

bool type_Atilde_conditions(const Quiver& q) {
  const std::size_t n = q.size();
  if (n < 2 || q.max_multiplicity() > 2) return false;

  // (i) precisely one full subquiver that is a non-oriented cycle.
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (q.multiplicity(a, b) == 2) cycles.push_back({a, b});
    }
  }
  for (auto& c : non_oriented_chordless_cycles(q)) cycles.push_back(std::move(c));
  if (cycles.size() != 1) return false;
  const auto& cycle = cycles.front();
  const std::size_t len = cycle.size();

  std::vector<bool> on_cycle(n, false);
  for (auto v : cycle) on_cycle[v] = true;

  // Cycle arrows as (source, target). A double arrow contributes two arrows.
  std::vector<std::pair<std::size_t, std::size_t>> cycle_arrows;
  if (len == 2) {
    cycle_arrows = {{cycle[0], cycle[1]}, {cycle[0], cycle[1]}};
  } else {
    for (std::size_t i = 0; i < len; ++i) {
      const auto a = cycle[i];
      const auto b = cycle[(i + 1) % len];
      cycle_arrows.emplace_back(q.multiplicity(a, b) > 0 ? std::pair{a, b} : std::pair{b, a});
    }
  }

  // (ii) every off-cycle vertex touching the cycle closes an oriented
  // triangle z -> x -> y -> z over one cycle arrow x -> y, and each arrow
  // carries at most one such z.
  std::vector<std::size_t> attached;
  std::vector<std::size_t> arrow_load(cycle_arrows.size(), 0);
  for (std::size_t z = 0; z < n; ++z) {
    if (on_cycle[z]) continue;
    std::vector<std::size_t> touch;
    for (auto v : cycle) {
      if (q.adjacent(z, v)) touch.push_back(v);
    }
    if (touch.empty()) continue;
    if (touch.size() != 2) return false;
    bool placed = false;
    for (std::size_t a = 0; a < cycle_arrows.size() && !placed; ++a) {
      const auto [x, y] = cycle_arrows[a];
      if (arrow_load[a] > 0) continue;
      if (!((touch[0] == x && touch[1] == y) || (touch[0] == y && touch[1] == x))) continue;
      if (q.multiplicity(y, z) == 1 && q.multiplicity(z, x) == 1) {
        ++arrow_load[a];
        placed = true;
      }
    }
    if (!placed) return false;
    attached.push_back(z);
  }

  // (iii) the rest splits into one type-A component per attached vertex z,
  // in which z has at most two neighbours, lying on an oriented triangle
  // when it has two.
  std::vector<int> component(n, -1);
  int components = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (on_cycle[v] || component[v] >= 0) continue;
    std::vector<std::size_t> stack{v};
    component[v] = components;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto w : q.neighbors(u)) {
        if (!on_cycle[w] && component[w] < 0) {
          component[w] = components;
          stack.push_back(w);
        }
      }
    }
    ++components;
  }
  std::vector<std::size_t> z_per_component(static_cast<std::size_t>(components), 0);
  for (auto z : attached) ++z_per_component[static_cast<std::size_t>(component[z])];
  for (auto count : z_per_component) {
    if (count != 1) return false;
  }
  for (auto z : attached) {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n; ++v) {
      if (component[v] == component[z]) members.push_back(v);
    }
    if (!type_A_conditions(q.induced(members))) return false;
    std::vector<std::size_t> inner;
    for (auto w : q.neighbors(z)) {
      if (!on_cycle[w]) inner.push_back(w);
    }
    if (inner.size() > 2) return false;
    if (inner.size() == 2 && !oriented_triangle(q, z, inner[0], inner[1])) return false;
  }
  return true;
}

}  // namespace

bool is_mutation_type_A(const Quiver& q) {
  require_connected(q);
  return type_A_conditions(q);
}

bool is_mutation_type_Atilde(const Quiver& q) {
  require_connected(q);
  return type_Atilde_conditions(q);
}

MutationType classify(const Quiver& q) {
  require_connected(q);
  if (type_A_conditions(q)) return {MutationType::Kind::A, q.size()};
  if (type_Atilde_conditions(q)) return {MutationType::Kind::ATilde, q.size() - 1};
  return {MutationType::Kind::Unknown, 0};
}

std::string to_string(const MutationType& t) {
  switch (t.kind) {
    case MutationType::Kind::A:
      return "A";
    case MutationType::Kind::ATilde:
      return "A-tilde";
    case MutationType::Kind::Unknown:
      break;
  }
  return "unknown";
}

}  // namespace clusterlab
