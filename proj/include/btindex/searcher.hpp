#pragma once

#include <span>
#include <vector>

#include "btindex/index.hpp"
#include "btindex/types.hpp"

namespace btindex {

/// A validated pattern. Single-symbol patterns are searched as P[1]
/// followed by a wildcard, so the effective length is 2.
struct query {
  std::vector<symbol_t> pattern;
  bool wildcard_tail = false;

  pos_t length() const { return pattern.size(); }
  pos_t effective_length() const { return wildcard_tail ? 2 : pattern.size(); }

  /// Throws std::invalid_argument on empty patterns or symbols outside 1..sigma.
  static query make(std::span<const symbol_t> pattern, symbol_t sigma);
};

enum class axis { x, y };

/// Inclusive rank interval; empty when lo > hi.
struct rank_range {
  pos_t lo;
  pos_t hi;

  bool empty() const { return lo > hi; }
  friend bool operator==(rank_range const&, rank_range const&) = default;
};

/// Ranks along `a` whose (capped) strings have q as a prefix. On the Y
/// axis q is the reversed pattern prefix. An empty q matches everything.
rank_range find_range(bt_index const& idx, std::span<const symbol_t> q, axis a);

/// Descends the occurrence S[i..i+m-1] through marked blocks while the
/// next level's blocks can still hold it, then reports it together with
/// all its copies via report_secondary.
void report_primary(bt_index const& idx, pos_t i, pos_t m, std::vector<pos_t>& sink);

/// Starting from the occurrence at S_l[i..i+m-1], visits every source
/// covering it on the way up to level 0, follows each into its unmarked
/// block (recursively), and appends the level-0 position of every
/// occurrence reached to `sink`.
void report_secondary(bt_index const& idx, std::size_t l, pos_t i, pos_t m, std::vector<pos_t>& sink);

/// Every position emitted for the pattern, before sorting and
/// deduplication. Each occurrence is expected exactly once.
std::vector<pos_t> search_emissions(bt_index const& idx, std::span<const symbol_t> pattern);

/// Sorted 1-based starts of all occurrences of the pattern in the
/// original text.
std::vector<pos_t> search(bt_index const& idx, std::span<const symbol_t> pattern);

}  // namespace btindex
