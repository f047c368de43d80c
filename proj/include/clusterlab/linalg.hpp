#pragma once

// Sparse exact linear algebra over Q, done fraction-free over Z.
//
// EchelonBasis keeps integer rows with pairwise distinct pivots (the smallest
// column of each row). Each row optionally carries the integer combination of
// inserted vectors it equals, so a reduction to zero yields an explicit
// certificate  scale * target = sum combo_m * input_m.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "clusterlab/laurent.hpp"

namespace clusterlab::linalg {

struct Entry {
  std::uint32_t column;
  Integer value;
};

/// Sorted by column, no zero values.
using SparseVector = std::vector<Entry>;

/// beta * x - alpha * y
SparseVector combine(const Integer& beta, const SparseVector& x, const Integer& alpha, const SparseVector& y);

class EchelonBasis {
 public:
  explicit EchelonBasis(bool track_combinations = true) : track_(track_combinations) {}

  /// Adds `row`, known to equal the combination `combo` of inputs. Returns
  /// true when the row is independent of the rows already present.
  bool insert(SparseVector row, SparseVector combo = {});

  struct Reduction {
    bool in_span = false;
    SparseVector combo;  // meaningful when in_span and combinations are tracked
    Integer scale = 1;   // scale * target == sum combo_m * input_m
  };
  Reduction reduce(SparseVector target) const;

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  struct Row {
    SparseVector values;
    SparseVector combo;
  };

  // Eliminates leading entries of `vec` while they hit pivots.
  void eliminate(SparseVector& vec, SparseVector& combo, Integer& scale) const;

  bool track_;
  std::vector<Row> rows_;
  std::unordered_map<std::uint32_t, std::size_t> pivot_row_;
};

/// Exact rank over Q. Full rank is confirmed by a rank computation modulo a
/// large prime (rank mod p <= rank over Q <= row count); otherwise the
/// fraction-free route decides.
std::size_t rank(const std::vector<SparseVector>& rows);

/// Rank modulo the prime 2^61 - 1 (a lower bound for the rank over Q).
std::size_t rank_mod_p(const std::vector<SparseVector>& rows);

/// Rank over Q by fraction-free elimination only.
std::size_t rank_exact(const std::vector<SparseVector>& rows);

}  // namespace clusterlab::linalg
