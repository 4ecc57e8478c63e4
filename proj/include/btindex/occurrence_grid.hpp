#pragma once

#include <span>
#include <vector>

#include "btindex/block_tree.hpp"
#include "btindex/byte_io.hpp"
#include "btindex/packed_ints.hpp"
#include "btindex/types.hpp"
#include "btindex/wavelet_tree.hpp"

namespace btindex {

/// Outcome of comparing a grid string against a query piece q.
enum class ordering {
  less,     ///< sorts before every string prefixed by q
  prefix,   ///< has q as a prefix
  greater,  ///< sorts after every string prefixed by q
};

/// Where a point's X string starts and how long its X and Y strings may be.
struct string_bounds {
  pos_t start;
  pos_t x_max_len;
  pos_t y_max_len;

  friend bool operator==(string_bounds const&, string_bounds const&) = default;
};

/// Bounds for a point whose X string starts at text position t.
string_bounds string_bounds_at(pos_t t, pos_t b0, pos_t n);

/*
    Grid of block-boundary pairs. Every split of a marked block B into
    B_left B_right contributes the point (B_right, reverse(B_left)); every
    level-0 boundary i contributes (B_{i+1}..B_z, reverse(B_i)). X and Y are
    sorted lexicographically (ties by text position) and the grid, one point
    per row and per column, is stored as the column -> row sequence in a
    wavelet tree. T[y] is the text position where the X string of row y
    begins. No string is stored: lengths follow from T and b0.
*/
class occurrence_grid {
 public:
  occurrence_grid() = default;
  /// Load-time constructor; validates sizes.
  occurrence_grid(wavelet_tree col_to_row, packed_ints positions, pos_t b0, pos_t n);

  /// `padded` is the text the tree was built over and `suffix_rank` the
  /// inverse suffix array of its terminated prefix (used to order the
  /// level-0 suffixes without comparing them symbol by symbol).
  static occurrence_grid build(block_tree const& tree, std::span<const symbol_t> padded,
                               std::span<const pos_t> suffix_rank);

  pos_t size() const { return col_to_row_.size(); }
  pos_t row_of(pos_t x) const { return col_to_row_.access(x); }
  /// T[y]
  pos_t position(pos_t y) const;
  pos_t top_block_length() const { return b0_; }
  pos_t text_length() const { return n_; }

  string_bounds x_string_bounds(pos_t y) const;

  ordering compare_x(block_tree const& tree, pos_t x, std::span<const symbol_t> q) const;
  ordering compare_y(block_tree const& tree, pos_t y, std::span<const symbol_t> q_rev) const;

  std::vector<wavelet_tree::point> range_report(pos_t x1, pos_t x2, pos_t y1, pos_t y2) const {
    return col_to_row_.range_report(x1, x2, y1, y2);
  }

  wavelet_tree const& points() const { return col_to_row_; }
  packed_ints const& positions() const { return positions_; }

  friend bool operator==(occurrence_grid const&, occurrence_grid const&) = default;

 private:
  ordering compare_row(block_tree const& tree, pos_t y, std::span<const symbol_t> q, bool forward) const;

  wavelet_tree col_to_row_;
  packed_ints positions_;
  pos_t b0_ = 0;
  pos_t n_ = 0;
};

}  // namespace btindex
