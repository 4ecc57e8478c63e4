#pragma once

#include <span>
#include <vector>

#include "btindex/byte_io.hpp"
#include "btindex/packed_ints.hpp"
#include "btindex/permutation.hpp"
#include "btindex/rank_select_bitvector.hpp"
#include "btindex/sparse_bitvector.hpp"
#include "btindex/types.hpp"

namespace btindex {

/// Global sizes of a block tree.
struct block_tree_shape {
  symbol_t sigma = 0;
  pos_t n_original = 0;  ///< input length
  pos_t n = 0;           ///< padded length, z_top * b0
  pos_t z = 0;           ///< LZ phrase count of the input
  pos_t z_top = 0;       ///< number of level-0 blocks
  pos_t b0 = 0;          ///< level-0 block length, a power of two

  symbol_t terminator() const { return static_cast<symbol_t>(sigma + 1); }
  symbol_t padding() const { return static_cast<symbol_t>(sigma + 2); }

  friend bool operator==(block_tree_shape const&, block_tree_shape const&) = default;
};

/// b0 is the smallest power of two with b0 * z >= terminated_length (the
/// input length plus the terminator); z_top = ceil(terminated_length / b0).
block_tree_shape compute_shape(symbol_t sigma, pos_t n_original, pos_t z);

/// One level of the tree. S_l is the concatenation of the level's explicit
/// blocks, so n_l = |D_l| * b_l.
struct level_data {
  pos_t block_length = 0;
  /// D_l: one bit per explicit block, 1 = marked.
  rank_select_bitvector marked;
  /// F_l over S_l: a 0 per position followed by a 1 per source starting there.
  sparse_bitvector sources;
  /// pi_l: i-th unmarked block -> index of the 1 in F_l signalling its source.
  invertible_permutation source_order;

  pos_t block_count() const { return marked.size(); }
  pos_t explicit_length() const { return marked.size() * block_length; }
  pos_t unmarked_count() const { return marked.count(false); }

  void write(byte_writer& out) const;
  static level_data read(byte_reader& in);

  friend bool operator==(level_data const&, level_data const&) = default;
};

/// Position in the next level of S_l position i, whose block (of length b)
/// must be marked in d. Throws std::invalid_argument otherwise.
pos_t project_down(rank_select_bitvector const& d, pos_t b, pos_t i);
/// Position in S_{l-1} of S_l position i, given D_{l-1} and b_{l-1}.
pos_t project_up(rank_select_bitvector const& parent_d, pos_t parent_b, pos_t i);

/*
    Block tree over a terminated and padded text S[1..n]. Level 0 cuts S into
    z_top blocks of length b0; every marked block is halved at the next level
    down to blocks of one symbol. A pair of S-adjacent explicit blocks is
    marked when its content occurs first at its own position in S; an
    explicit block in no such pair is unmarked and copies the leftmost
    occurrence of its content (its source), which always covers marked
    blocks only. Marked last-level blocks store their symbol.
*/
class block_tree {
 public:
  block_tree() = default;
  /// Assembles a tree from its parts, checking every structural invariant.
  /// Throws std::invalid_argument on inconsistency.
  block_tree(block_tree_shape shape, std::vector<level_data> levels, packed_ints leaf_symbols);

  /// Builds the tree over `padded` (length shape.n, terminator and padding
  /// already appended). Throws std::logic_error if a source ever fails to
  /// cover only marked blocks.
  static block_tree build(std::span<const symbol_t> padded, block_tree_shape const& shape);

  block_tree_shape const& shape() const { return shape_; }
  std::size_t level_count() const { return levels_.size(); }
  std::size_t last_level() const { return levels_.size() - 1; }
  level_data const& level(std::size_t l) const { return levels_.at(l); }
  packed_ints const& leaf_symbols() const { return leaves_; }

  /// Symbol S[i] of the padded text, 1 <= i <= n.
  symbol_t symbol_at(pos_t i) const;

  /// Substring of the original text starting at i (1-based).
  std::vector<symbol_t> extract(pos_t i, pos_t len) const;

  /// Maps S_l position i, inside a marked block, to S_{l+1}.
  pos_t project_down(std::size_t l, pos_t i) const;
  /// Maps S_l position i (l >= 1) to S_{l-1}.
  pos_t project_up(std::size_t l, pos_t i) const;
  /// Start in S_l of the source of the r-th unmarked block of level l.
  pos_t source_position(std::size_t l, pos_t r) const;

  /// Marked blocks that are split, i.e. internal nodes (levels 0..L-1).
  pos_t internal_count() const;
  /// Unmarked blocks over all levels.
  pos_t unmarked_total() const;
  /// Leaves w: unmarked blocks plus marked last-level blocks.
  pos_t leaf_count() const;

  friend bool operator==(block_tree const&, block_tree const&) = default;

 private:
  block_tree_shape shape_;
  std::vector<level_data> levels_;
  packed_ints leaves_;
};

}  // namespace btindex
