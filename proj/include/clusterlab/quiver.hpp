#pragma once

// Quivers without loops or 2-cycles, their skew-symmetric exchange matrices,
// mutation, and the structural classifiers for mutation types A_n and Ã_n.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusterlab/error.hpp"

namespace clusterlab {

/// Vertex indices are 0-based internally and 1-based in every external format.
using MutationSequence = std::vector<std::size_t>;

class ExchangeMatrix;

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(std::size_t n) : n_(n), m_(n * n, 0) {}

  /// Builds from 0-based (source, target) pairs; repeated pairs add multiplicity.
  static Quiver from_arrows(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows);
  static Quiver from_matrix(const ExchangeMatrix& b);

  std::size_t size() const noexcept { return n_; }
  int multiplicity(std::size_t from, std::size_t to) const { return m_[index(from, to)]; }
  /// b_ij = #(i -> j) - #(j -> i)
  int exchange(std::size_t i, std::size_t j) const { return multiplicity(i, j) - multiplicity(j, i); }

  /// Adds `count` arrows from -> to. Throws InvalidQuiver on loops or when the
  /// opposite arrow exists.
  void add_arrow(std::size_t from, std::size_t to, int count = 1);

  /// Three-step rule: composite arrows through k, reverse arrows at k, cancel 2-cycles.
  Quiver mutate(std::size_t k) const;
  Quiver mutate(const MutationSequence& sequence) const;

  ExchangeMatrix exchange_matrix() const;

  /// Arrows as (source, target, multiplicity), sorted by source then target.
  std::vector<std::tuple<std::size_t, std::size_t, int>> arrows() const;
  int max_multiplicity() const;
  std::size_t arrow_count() const;

  /// Underlying simple graph adjacency (ignores orientation and multiplicity).
  bool adjacent(std::size_t a, std::size_t b) const { return multiplicity(a, b) + multiplicity(b, a) > 0; }
  std::vector<std::size_t> neighbors(std::size_t v) const;

  bool is_connected() const;

  /// Relabels vertices: vertex v becomes perm[v].
  Quiver permuted(const std::vector<std::size_t>& perm) const;
  /// Full subquiver on `vertices` (listed order becomes the new labeling).
  Quiver induced(const std::vector<std::size_t>& vertices) const;

  const std::vector<int>& raw() const noexcept { return m_; }

  friend bool operator==(const Quiver&, const Quiver&) = default;
  friend auto operator<=>(const Quiver& a, const Quiver& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.m_ <=> b.m_;
  }

 private:
  std::size_t index(std::size_t from, std::size_t to) const {
    if (from >= n_ || to >= n_) throw InvalidVertex("vertex out of range");
    return from * n_ + to;
  }
  void check_vertex(std::size_t v) const;

  std::size_t n_ = 0;
  std::vector<int> m_;
};

/// Skew-symmetric integer matrix with the matrix mutation rule.
class ExchangeMatrix {
 public:
  explicit ExchangeMatrix(std::vector<std::vector<int>> b);

  std::size_t size() const noexcept { return b_.size(); }
  int operator()(std::size_t i, std::size_t j) const { return b_[i][j]; }
  ExchangeMatrix mutate(std::size_t k) const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

 private:
  std::vector<std::vector<int>> b_;
};

struct QuiverHash {
  std::size_t operator()(const Quiver& q) const noexcept;
};

bool is_acyclic(const Quiver& q);

/// Topological labeling listing sinks first: every arrow points from a later
/// position to an earlier one. Ties go to the smallest vertex index.
/// Throws NotAcyclic.
MutationSequence sink_order(const Quiver& q);

/// Shortest sequence (lexicographically smallest among shortest) whose
/// mutations make q acyclic; empty when q is already acyclic.
std::optional<MutationSequence> find_acyclic_sequence(const Quiver& q, std::size_t max_depth);

/// Structural test for membership in the mutation class of an A_n path.
/// Throws Disconnected for disconnected input.
bool is_mutation_type_A(const Quiver& q);

/// Structural test for membership in the mutation class of Ã_{n-1}
/// (n = vertex count). Throws Disconnected for disconnected input.
bool is_mutation_type_Atilde(const Quiver& q);

struct MutationType {
  enum class Kind { A, ATilde, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t rank = 0;  // the n of A_n / Ã_n

  friend bool operator==(const MutationType&, const MutationType&) = default;
};

MutationType classify(const Quiver& q);
std::string to_string(const MutationType& t);

/// Canonical representative under vertex relabeling (lexicographically
/// smallest multiplicity matrix over all permutations). Intended for small n.
Quiver canonical_form(const Quiver& q);

}  // namespace clusterlab
