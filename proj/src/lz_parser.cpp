#include "btindex/lz_parser.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace btindex {

namespace {

// Range minimum over the suffix array: answers "leftmost text position
// among the suffixes in SA[lo..hi]".
class min_tree {
 public:
  explicit min_tree(std::vector<pos_t> const& values) : n_(values.size()), t_(2 * values.size()) {
    std::copy(values.begin(), values.end(), t_.begin() + static_cast<std::ptrdiff_t>(n_));
    for (pos_t i = n_; i-- > 1;) t_[i] = std::min(t_[2 * i], t_[2 * i + 1]);
  }

  pos_t min(pos_t lo, pos_t hi) const {
    pos_t best = std::numeric_limits<pos_t>::max();
    for (lo += n_, hi += n_ + 1; lo < hi; lo >>= 1, hi >>= 1) {
      if (lo & 1) best = std::min(best, t_[lo++]);
      if (hi & 1) best = std::min(best, t_[--hi]);
    }
    return best;
  }

 private:
  pos_t n_;
  std::vector<pos_t> t_;
};

}  // namespace

phrase_list lz_parse(std::span<const symbol_t> text) {
  if (text.empty()) throw std::invalid_argument("cannot parse an empty text");
  return lz_parse(text, text, suffix_array::build(text));
}

phrase_list lz_parse(std::span<const symbol_t> text, std::span<const symbol_t> sequence, suffix_array const& sa) {
  if (text.empty()) throw std::invalid_argument("cannot parse an empty text");
  if (sequence.size() < text.size() || sa.sa.size() != sequence.size() ||
      !std::equal(text.begin(), text.end(), sequence.begin()))
    throw std::invalid_argument("suffix array sequence must extend the text");

  const pos_t n = text.size();
  const pos_t total = sequence.size();
  min_tree leftmost(sa.sa);
  auto key = [&](pos_t r, pos_t depth) -> std::int64_t {
    const pos_t p = sa.sa[r] + depth;
    return p < total ? static_cast<std::int64_t>(sequence[p]) : -1;
  };

  phrase_list out;
  for (pos_t i = 0; i < n;) {
    // [lo, hi] is the SA interval of suffixes prefixed by text[i..i+len).
    pos_t lo = 0, hi = total - 1, len = 0;
    pos_t best_len = 0, best_src = 0;
    while (i + len < n) {
      const std::int64_t c = text[i + len];
      const pos_t base = lo;
      pos_t a = base, b = hi + 1;
      while (a < b) {
        const pos_t mid = a + (b - a) / 2;
        if (key(mid, len) < c) a = mid + 1;
        else b = mid;
      }
      const pos_t new_lo = a;
      b = hi + 1;
      while (a < b) {
        const pos_t mid = a + (b - a) / 2;
        if (key(mid, len) <= c) a = mid + 1;
        else b = mid;
      }
      lo = new_lo;
      hi = a - 1;
      ++len;
      // The source must end before position i.
      const pos_t src = leftmost.min(lo, hi);
      if (src + len > i) break;
      best_len = len;
      best_src = src;
    }
    if (best_len == 0) {
      out.phrases.push_back({i + 1, 1, std::nullopt});
      i += 1;
    } else {
      out.phrases.push_back({i + 1, best_len, best_src + 1});
      i += best_len;
    }
  }
  return out;
}

}  // namespace btindex
