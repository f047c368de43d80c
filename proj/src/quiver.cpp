#include "clusterlab/quiver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>
#include <unordered_set>

namespace clusterlab {

Quiver Quiver::from_arrows(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  Quiver q(n);
  for (auto [from, to] : arrows) q.add_arrow(from, to, 1);
  return q;
}

Quiver Quiver::from_matrix(const ExchangeMatrix& b) {
  Quiver q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b(i, j) > 0) q.m_[i * q.n_ + j] = b(i, j);
    }
  }
  return q;
}

void Quiver::check_vertex(std::size_t v) const {
  if (v >= n_) {
    throw InvalidVertex("vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(n_));
  }
}

void Quiver::add_arrow(std::size_t from, std::size_t to, int count) {
  check_vertex(from);
  check_vertex(to);
  if (count < 0) throw InvalidQuiver("negative arrow count");
  if (count == 0) return;
  if (from == to) throw InvalidQuiver("loop at vertex " + std::to_string(from + 1));
  if (multiplicity(to, from) > 0) {
    throw InvalidQuiver("2-cycle between vertices " + std::to_string(from + 1) + " and " +
                        std::to_string(to + 1));
  }
  m_[index(from, to)] += count;
}

Quiver Quiver::mutate(std::size_t k) const {
  check_vertex(k);
  // Step 1: for every path i -> k -> j add m(i,k)*m(k,j) arrows i -> j.
  std::vector<int> work = m_;
  for (std::size_t i = 0; i < n_; ++i) {
    const int in = m_[i * n_ + k];
    if (in == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      const int out = m_[k * n_ + j];
      if (out != 0 && i != j) work[i * n_ + j] += in * out;
    }
  }
  // Step 2: reverse all arrows incident with k.
  for (std::size_t i = 0; i < n_; ++i) {
    std::swap(work[i * n_ + k], work[k * n_ + i]);
  }
  // Step 3: cancel 2-cycles.
  Quiver out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const int a = work[i * n_ + j];
      const int b = work[j * n_ + i];
      if (a > b) out.m_[i * n_ + j] = a - b;
      if (b > a) out.m_[j * n_ + i] = b - a;
    }
  }
  return out;
}

Quiver Quiver::mutate(const MutationSequence& sequence) const {
  Quiver q = *this;
  for (auto k : sequence) q = q.mutate(k);
  return q;
}

ExchangeMatrix Quiver::exchange_matrix() const {
  std::vector<std::vector<int>> b(n_, std::vector<int>(n_, 0));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) b[i][j] = exchange(i, j);
  }
  return ExchangeMatrix(std::move(b));
}

std::vector<std::tuple<std::size_t, std::size_t, int>> Quiver::arrows() const {
  std::vector<std::tuple<std::size_t, std::size_t, int>> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (m_[i * n_ + j] > 0) out.emplace_back(i, j, m_[i * n_ + j]);
    }
  }
  return out;
}

int Quiver::max_multiplicity() const {
  return m_.empty() ? 0 : *std::max_element(m_.begin(), m_.end());
}

std::size_t Quiver::arrow_count() const {
  return static_cast<std::size_t>(std::accumulate(m_.begin(), m_.end(), 0));
}

std::vector<std::size_t> Quiver::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n_; ++u) {
    if (u != v && adjacent(u, v)) out.push_back(u);
  }
  return out;
}

bool Quiver::is_connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto u : neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n_;
}

Quiver Quiver::permuted(const std::vector<std::size_t>& perm) const {
  Quiver out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out.m_[perm[i] * n_ + perm[j]] = m_[i * n_ + j];
  }
  return out;
}

Quiver Quiver::induced(const std::vector<std::size_t>& vertices) const {
  Quiver out(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = 0; b < vertices.size(); ++b) {
      out.m_[a * out.n_ + b] = multiplicity(vertices[a], vertices[b]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ExchangeMatrix::ExchangeMatrix(std::vector<std::vector<int>> b) : b_(std::move(b)) {
  for (std::size_t i = 0; i < b_.size(); ++i) {
    if (b_[i].size() != b_.size()) throw InvalidQuiver("exchange matrix is not square");
  }
  for (std::size_t i = 0; i < b_.size(); ++i) {
    for (std::size_t j = 0; j < b_.size(); ++j) {
      if (b_[i][j] != -b_[j][i]) throw InvalidQuiver("exchange matrix is not skew-symmetric");
    }
  }
}

ExchangeMatrix ExchangeMatrix::mutate(std::size_t k) const {
  const std::size_t n = b_.size();
  if (k >= n) throw InvalidVertex("vertex out of range");
  std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out[i][j] = -b_[i][j];
      } else {
        const int bik = b_[i][k];
        const int bkj = b_[k][j];
        out[i][j] = b_[i][j] + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  }
  return ExchangeMatrix(std::move(out));
}

std::size_t QuiverHash::operator()(const Quiver& q) const noexcept {
  std::size_t h = q.size();
  for (int v : q.raw()) h = h * 1000003u ^ static_cast<std::size_t>(v);
  return h;
}

// ---------------------------------------------------------------------------

bool is_acyclic(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) indegree[j] += q.multiplicity(i, j) > 0 ? 1 : 0;
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const auto v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t j = 0; j < n; ++j) {
      if (q.multiplicity(v, j) > 0 && --indegree[j] == 0) ready.push_back(j);
    }
  }
  return removed == n;
}

MutationSequence sink_order(const Quiver& q) {
  const std::size_t n = q.size();
  std::vector<bool> placed(n, false);
  MutationSequence order;
  order.reserve(n);
  while (order.size() < n) {
    bool progressed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      bool sink = true;
      for (std::size_t j = 0; j < n && sink; ++j) {
        if (!placed[j] && q.multiplicity(v, j) > 0) sink = false;
      }
      if (sink) {
        placed[v] = true;
        order.push_back(v);
        progressed = true;
        break;
      }
    }
    if (!progressed) throw NotAcyclic("quiver has an oriented cycle");
  }
  return order;
}

std::optional<MutationSequence> find_acyclic_sequence(const Quiver& q, std::size_t max_depth) {
  if (is_acyclic(q)) return MutationSequence{};
  struct Node {
    Quiver quiver;
    MutationSequence path;
  };
  std::unordered_set<Quiver, QuiverHash> seen{q};
  std::deque<Node> frontier{Node{q, {}}};
  // Parents are expanded in lexicographic order of their paths and children
  // by ascending vertex, so the first hit at each depth is lexicographically
  // smallest among the shortest sequences.
  while (!frontier.empty()) {
    Node node = std::move(frontier.front());
    frontier.pop_front();
    if (node.path.size() >= max_depth) continue;
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (!node.path.empty() && node.path.back() == k) continue;
      Quiver next = node.quiver.mutate(k);
      if (!seen.insert(next).second) continue;
      MutationSequence path = node.path;
      path.push_back(k);
      if (is_acyclic(next)) return path;
      frontier.push_back(Node{std::move(next), std::move(path)});
    }
  }
  return std::nullopt;
}

Quiver canonical_form(const Quiver& q) {
  std::vector<std::size_t> perm(q.size());
  std::iota(perm.begin(), perm.end(), 0);
  Quiver best = q;
  do {
    Quiver candidate = q.permuted(perm);
    if (candidate < best) best = std::move(candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace clusterlab
