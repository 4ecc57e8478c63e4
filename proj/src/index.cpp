#include "btindex/index.hpp"

#include <stdexcept>
#include <vector>

#include "btindex/lz_parser.hpp"
#include "btindex/suffix_array.hpp"

namespace btindex {

bt_index bt_index::build(std::span<const symbol_t> text, symbol_t sigma) {
  if (text.empty()) throw std::invalid_argument("empty input");
  if (sigma < 1 || sigma > 0xFFFD) throw std::invalid_argument("alphabet size out of range");
  for (symbol_t s : text) {
    if (s < 1 || s > sigma) throw std::invalid_argument("symbol " + std::to_string(s) + " outside alphabet");
  }

  std::vector<symbol_t> padded(text.begin(), text.end());
  padded.push_back(static_cast<symbol_t>(sigma + 1));
  const auto sa = suffix_array::build(padded);
  const pos_t z = lz_parse(text, padded, sa).z();

  const auto shape = compute_shape(sigma, text.size(), z);
  padded.resize(shape.n, shape.padding());

  bt_index idx;
  idx.tree = block_tree::build(padded, shape);
  idx.grid = occurrence_grid::build(idx.tree, padded, sa.rank);
  return idx;
}

}  // namespace btindex
