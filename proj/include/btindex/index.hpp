#pragma once

#include <span>

#include "btindex/block_tree.hpp"
#include "btindex/occurrence_grid.hpp"
#include "btindex/types.hpp"

namespace btindex {

/// The full self-index: the block tree (which replaces the text) plus the
/// grid of block-boundary pairs used to find primary occurrences.
struct bt_index {
  block_tree tree;
  occurrence_grid grid;

  /// Indexes `text` over symbols 1..sigma: parses it to obtain z, appends
  /// the terminator, pads to z_top * b0 and builds tree and grid.
  /// Throws std::invalid_argument on empty text or out-of-alphabet symbols.
  static bt_index build(std::span<const symbol_t> text, symbol_t sigma);

  block_tree_shape const& shape() const { return tree.shape(); }

  friend bool operator==(bt_index const&, bt_index const&) = default;
};

}  // namespace btindex
