#include "btindex/searcher.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

namespace btindex {

namespace {

pos_t ceil_div(pos_t a, pos_t b) { return (a + b - 1) / b; }

ordering compare_rank(bt_index const& idx, pos_t r, std::span<const symbol_t> q, axis a) {
  return a == axis::x ? idx.grid.compare_x(idx.tree, r, q) : idx.grid.compare_y(idx.tree, r, q);
}

}  // namespace

query query::make(std::span<const symbol_t> pattern, symbol_t sigma) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  for (symbol_t s : pattern) {
    if (s < 1 || s > sigma) throw std::invalid_argument("pattern symbol " + std::to_string(s) + " outside alphabet");
  }
  query q;
  q.pattern.assign(pattern.begin(), pattern.end());
  q.wildcard_tail = pattern.size() == 1;
  return q;
}

rank_range find_range(bt_index const& idx, std::span<const symbol_t> q, axis a) {
  const pos_t count = idx.grid.size();
  if (q.empty()) return {1, count};
  // First rank not sorting before q.
  pos_t lo = 1, hi = count + 1;
  while (lo < hi) {
    const pos_t mid = lo + (hi - lo) / 2;
    if (compare_rank(idx, mid, q, a) == ordering::less) lo = mid + 1;
    else hi = mid;
  }
  const pos_t first = lo;
  // First rank sorting after q.
  hi = count + 1;
  while (lo < hi) {
    const pos_t mid = lo + (hi - lo) / 2;
    if (compare_rank(idx, mid, q, a) != ordering::greater) lo = mid + 1;
    else hi = mid;
  }
  return {first, lo - 1};
}

void report_primary(bt_index const& idx, pos_t i, pos_t m, std::vector<pos_t>& sink) {
  auto const& tree = idx.tree;
  std::size_t l = 0;
  pos_t b = tree.shape().b0;
  while (b / 2 >= m && l < tree.last_level()) {
    auto const& marked = tree.level(l).marked;
    const pos_t j = ceil_div(i, b);
    if (!marked[j] || !marked[ceil_div(i + m - 1, b)]) break;
    i = (marked.rank1(j) - 1) * b + ((i - 1) % b) + 1;
    ++l;
    b /= 2;
  }
  report_secondary(idx, l, i, m, sink);
}

void report_secondary(bt_index const& idx, std::size_t l, pos_t i, pos_t m, std::vector<pos_t>& sink) {
  auto const& tree = idx.tree;
  std::vector<std::pair<std::size_t, pos_t>> pending{{l, i}};
  while (!pending.empty()) {
    auto [lev, pos] = pending.back();
    pending.pop_back();
    for (;;) {
      auto const& lv = tree.level(lev);
      const pos_t b = lv.block_length;
      if (m <= b && lv.unmarked_count() > 0) {
        const pos_t nl = lv.explicit_length();
        // Sources covering [pos, pos + m - 1] start in [k_lo, k_hi].
        const pos_t k_lo = pos + m > b ? pos + m - b : 1;
        const pos_t k_hi = std::min(pos, nl - b + 1);
        if (k_lo <= k_hi) {
          auto const& f = lv.sources;
          const pos_t p = f.select0(k_lo);
          const pos_t p_end = k_hi + 1 <= nl ? f.select0(k_hi + 1) : f.size() + 1;
          for (pos_t t = p - k_lo + 1; t + k_hi + 1 <= p_end; ++t) {
            const pos_t src = f.select1(t) - t;
            if (src > pos || src + b < pos + m) continue;
            const pos_t q = lv.source_order.invert(t);
            const pos_t target = (lv.marked.select0(q) - 1) * b + 1 + (pos - src);
            pending.emplace_back(lev, target);
          }
        }
      }
      if (lev == 0) {
        sink.push_back(pos);
        break;
      }
      pos = tree.project_up(lev, pos);
      --lev;
    }
  }
}

std::vector<pos_t> search_emissions(bt_index const& idx, std::span<const symbol_t> pattern) {
  const auto q = query::make(pattern, idx.shape().sigma);
  std::vector<pos_t> sink;
  if (q.length() > idx.shape().n_original) return sink;

  const pos_t m = q.effective_length();
  std::vector<symbol_t> left;
  for (pos_t k = 1; k < m; ++k) {
    // Y holds reversed left blocks: search for P[1..k] reversed.
    left.assign(q.pattern.rbegin() + static_cast<std::ptrdiff_t>(q.length() - k), q.pattern.rend());
    const auto ys = find_range(idx, left, axis::y);
    if (ys.empty()) continue;
    std::span<const symbol_t> right;
    if (!q.wildcard_tail) right = std::span<const symbol_t>(q.pattern).subspan(k);
    const auto xs = find_range(idx, right, axis::x);
    if (xs.empty()) continue;
    for (auto const& pt : idx.grid.range_report(xs.lo, xs.hi, ys.lo, ys.hi)) {
      report_primary(idx, idx.grid.position(pt.y) - k, m, sink);
    }
  }
  return sink;
}

std::vector<pos_t> search(bt_index const& idx, std::span<const symbol_t> pattern) {
  auto found = search_emissions(idx, pattern);
  const pos_t m = pattern.size();
  const pos_t limit = idx.shape().n_original;
  std::erase_if(found, [&](pos_t p) { return p + m - 1 > limit; });
  std::sort(found.begin(), found.end());
  assert(std::adjacent_find(found.begin(), found.end()) == found.end() && "occurrence emitted twice");
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace btindex
