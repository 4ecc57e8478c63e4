#pragma once

#include <span>
#include <vector>

#include "btindex/types.hpp"

namespace btindex {

/// Suffix array and its inverse (both 0-based) over a symbol sequence.
/// A suffix that is a proper prefix of another sorts first.
struct suffix_array {
  std::vector<pos_t> sa;
  std::vector<pos_t> rank;

  static suffix_array build(std::span<const symbol_t> s);
};

}  // namespace btindex
