#pragma once

#include <optional>
#include <span>
#include <vector>

#include "btindex/suffix_array.hpp"
#include "btindex/types.hpp"

namespace btindex {

/// One phrase of a non-overlapping LZ77 parse. A literal has no source.
struct phrase {
  pos_t start;
  pos_t length;
  std::optional<pos_t> source;

  friend bool operator==(phrase const&, phrase const&) = default;
};

struct phrase_list {
  std::vector<phrase> phrases;

  pos_t z() const { return phrases.size(); }
};

/// Greedy left-to-right non-overlapping LZ77 parse (LZSS style). Each
/// phrase is the longest factor with an earlier occurrence that ends before
/// the phrase starts, taking the leftmost such source; a symbol with no
/// earlier occurrence becomes a length-1 literal. Positions are 1-based.
/// Throws std::invalid_argument on empty text.
phrase_list lz_parse(std::span<const symbol_t> text);

/// Same parse, reusing a suffix array built over any sequence that has
/// `text` as a prefix.
phrase_list lz_parse(std::span<const symbol_t> text, std::span<const symbol_t> sequence, suffix_array const& sa);

}  // namespace btindex
