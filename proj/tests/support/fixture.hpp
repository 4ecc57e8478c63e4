#pragma once

#include <string>
#include <vector>

#include "btindex/alphabet.hpp"
#include "btindex/index.hpp"
#include "corpora.hpp"

namespace btindex::testing {

/// A text in dense symbols together with the index built over it.
struct indexed_text {
  alphabet symbols;
  std::vector<symbol_t> text;
  bt_index index;

  explicit indexed_text(bytes const& raw)
      : symbols(alphabet::of(raw)), text(*symbols.encode(raw)), index(bt_index::build(text, symbols.sigma())) {}
  explicit indexed_text(std::string const& raw) : indexed_text(to_bytes(raw)) {}

  std::vector<symbol_t> encode(std::string const& s) const { return *symbols.encode(to_bytes(s)); }
};

}  // namespace btindex::testing
