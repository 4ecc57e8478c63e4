#include "btindex/suffix_array.hpp"

#include <algorithm>

namespace btindex {

// Prefix doubling with counting sorts: O(n log n).
suffix_array suffix_array::build(std::span<const symbol_t> s) {
  const pos_t n = s.size();
  suffix_array out;
  if (n == 0) return out;
  std::vector<pos_t>& sa = out.sa;
  std::vector<pos_t>& rank = out.rank;
  sa.resize(n);
  rank.resize(n);
  std::vector<pos_t> tmp(n), cnt;

  const pos_t sigma = *std::max_element(s.begin(), s.end()) + pos_t{1};
  cnt.assign(sigma, 0);
  for (pos_t i = 0; i < n; ++i) ++cnt[s[i]];
  for (pos_t c = 1; c < sigma; ++c) cnt[c] += cnt[c - 1];
  for (pos_t i = n; i-- > 0;) sa[--cnt[s[i]]] = i;
  pos_t classes = 1;
  rank[sa[0]] = 0;
  for (pos_t r = 1; r < n; ++r) {
    if (s[sa[r]] != s[sa[r - 1]]) ++classes;
    rank[sa[r]] = classes - 1;
  }

  for (pos_t k = 1; classes < n; k <<= 1) {
    // Order by second key: suffixes without a partner (i + k >= n) first.
    pos_t p = 0;
    for (pos_t i = n - k; i < n; ++i) tmp[p++] = i;
    for (pos_t r = 0; r < n; ++r)
      if (sa[r] >= k) tmp[p++] = sa[r] - k;
    // Stable counting sort by first key.
    cnt.assign(classes, 0);
    for (pos_t i = 0; i < n; ++i) ++cnt[rank[i]];
    for (pos_t c = 1; c < classes; ++c) cnt[c] += cnt[c - 1];
    for (pos_t r = n; r-- > 0;) sa[--cnt[rank[tmp[r]]]] = tmp[r];

    auto second = [&](pos_t i) -> std::int64_t { return i + k < n ? static_cast<std::int64_t>(rank[i + k]) : -1; };
    tmp[sa[0]] = 0;
    classes = 1;
    for (pos_t r = 1; r < n; ++r) {
      const pos_t a = sa[r - 1], b = sa[r];
      if (rank[a] != rank[b] || second(a) != second(b)) ++classes;
      tmp[b] = classes - 1;
    }
    rank.swap(tmp);
  }
  return out;
}

}  // namespace btindex
