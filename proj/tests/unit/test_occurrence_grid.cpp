#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "btindex/occurrence_grid.hpp"
#include "btindex/searcher.hpp"
#include "fixture.hpp"
#include "reference_tree.hpp"

using namespace btindex;
using namespace btindex::testing;

namespace {

using seq = std::vector<symbol_t>;

// The capped X and Y strings of every row, read straight from S.
struct materialized {
  std::vector<seq> x_of_row, y_of_row;
};

materialized materialize(occurrence_grid const& grid, seq const& s) {
  materialized m;
  for (pos_t y = 1; y <= grid.size(); ++y) {
    const auto b = grid.x_string_bounds(y);
    m.x_of_row.emplace_back(s.begin() + (b.start - 1), s.begin() + (b.start - 1 + b.x_max_len));
    seq rev(s.begin() + (b.start - 1 - b.y_max_len), s.begin() + (b.start - 1));
    std::reverse(rev.begin(), rev.end());
    m.y_of_row.push_back(rev);
  }
  return m;
}

bool same_range(rank_range a, rank_range b) { return (a.empty() && b.empty()) || a == b; }

bool has_prefix(seq const& s, seq const& q) { return q.size() <= s.size() && std::equal(q.begin(), q.end(), s.begin()); }

// Ranks (1-based) whose string has q as a prefix, as a contiguous range.
rank_range scan_range(std::vector<seq> const& by_rank, seq const& q) {
  pos_t lo = 0, hi = 0;
  for (pos_t r = 1; r <= by_rank.size(); ++r)
    if (has_prefix(by_rank[r - 1], q)) {
      if (lo == 0) lo = r;
      REQUIRE((hi == 0 || hi == r - 1));
      hi = r;
    }
  return lo == 0 ? rank_range{1, 0} : rank_range{lo, hi};
}

std::vector<bytes> grid_texts() {
  std::vector<bytes> out;
  for (auto const& f : exhaustive_fixtures()) out.push_back(f.text);
  std::mt19937_64 rng(41);
  out.push_back(mutated_copies(rng, 128, 8, 0.02));
  out.push_back(random_text(rng, 700, 3));
  return out;
}

}  // namespace

TEST_CASE("string bounds from the position alone") {
  CHECK(string_bounds_at(7, 8, 64) == string_bounds{7, 2, 2});
  CHECK(string_bounds_at(9, 8, 64) == string_bounds{9, 64 - 8, 8});
  CHECK(string_bounds_at(5, 8, 64) == string_bounds{5, 4, 4});
  CHECK(string_bounds_at(2, 8, 64) == string_bounds{2, 1, 1});
}

TEST_CASE("points are the block splits and level-0 boundaries") {
  for (auto const& raw : grid_texts()) {
    indexed_text t(raw);
    auto const& tree = t.index.tree;
    auto const& grid = t.index.grid;
    const auto s = padded_text(t.text, tree.shape());
    const auto ref = reference_tree(s, tree.shape());

    std::multiset<pos_t> expect;
    for (pos_t i = 1; i < tree.shape().z_top; ++i) expect.insert(i * tree.shape().b0 + 1);
    for (std::size_t l = 0; l + 1 < ref.size(); ++l)
      for (std::size_t j = 0; j < ref[l].starts.size(); ++j)
        if (ref[l].marked[j]) expect.insert(ref[l].starts[j] + ref[l].block_length / 2);
    std::multiset<pos_t> got;
    for (pos_t y = 1; y <= grid.size(); ++y) got.insert(grid.position(y));
    REQUIRE(got == expect);
    REQUIRE(grid.size() == tree.leaf_count() - 1);

    std::vector<pos_t> rows;
    for (pos_t x = 1; x <= grid.size(); ++x) rows.push_back(grid.row_of(x));
    std::sort(rows.begin(), rows.end());
    for (pos_t k = 0; k < rows.size(); ++k) REQUIRE(rows[k] == k + 1);
  }
}

TEST_CASE("both axes are sorted and ranges match a scan") {
  std::mt19937_64 rng(43);
  for (auto const& raw : grid_texts()) {
    indexed_text t(raw);
    auto const& grid = t.index.grid;
    const auto s = padded_text(t.text, t.index.shape());
    const auto mat = materialize(grid, s);
    const pos_t w = grid.size();
    if (w == 0) continue;

    std::vector<seq> x_sorted(w), y_sorted(w);
    for (pos_t x = 1; x <= w; ++x) x_sorted[x - 1] = mat.x_of_row[grid.row_of(x) - 1];
    for (pos_t y = 1; y <= w; ++y) y_sorted[y - 1] = mat.y_of_row[y - 1];
    REQUIRE(std::is_sorted(x_sorted.begin(), x_sorted.end()));
    REQUIRE(std::is_sorted(y_sorted.begin(), y_sorted.end()));

    CHECK(find_range(t.index, {}, axis::x) == rank_range{1, w});
    CHECK(find_range(t.index, {}, axis::y) == rank_range{1, w});
    const seq beyond{static_cast<symbol_t>(t.index.shape().sigma), static_cast<symbol_t>(t.index.shape().padding())};
    CHECK(find_range(t.index, beyond, axis::x).empty());

    // Pattern pieces taken from the text plus random ones.
    const pos_t n = t.text.size();
    for (int k = 0; k < 200; ++k) {
      const pos_t len = 1 + rng() % std::min<pos_t>(12, n);
      seq q;
      if (k % 2 == 0) {
        const pos_t at = rng() % (n - len + 1);
        q.assign(t.text.begin() + at, t.text.begin() + at + len);
      } else {
        for (pos_t j = 0; j < len; ++j) q.push_back(1 + rng() % t.symbols.sigma());
      }
      REQUIRE(same_range(find_range(t.index, q, axis::x), scan_range(x_sorted, q)));
      REQUIRE(same_range(find_range(t.index, q, axis::y), scan_range(y_sorted, q)));
      for (pos_t y = 1; y <= w; y += 1 + w / 16) {
        const auto cy = grid.compare_y(t.index.tree, y, q);
        CHECK((cy == ordering::prefix) == has_prefix(mat.y_of_row[y - 1], q));
      }
    }
  }
}

TEST_CASE("reversed left context") {
  indexed_text t(std::string("abxab"));
  auto const& grid = t.index.grid;
  const auto s = padded_text(t.text, t.index.shape());
  for (pos_t y = 1; y <= grid.size(); ++y) {
    const pos_t p = grid.position(y);
    if (p < 3 || s[p - 3] != t.encode("a")[0] || s[p - 2] != t.encode("b")[0]) continue;
    if (grid.x_string_bounds(y).y_max_len < 2) continue;
    CHECK(grid.compare_y(t.index.tree, y, t.encode("b")) == ordering::prefix);
    CHECK(grid.compare_y(t.index.tree, y, t.encode("ba")) == ordering::prefix);
  }
}

TEST_CASE("range report against a scan of the points") {
  std::mt19937_64 rng(47);
  indexed_text t(mutated_copies(rng, 256, 12, 0.02));
  auto const& grid = t.index.grid;
  const pos_t w = grid.size();
  CHECK(grid.range_report(1, w, 1, w).size() == w);
  CHECK(grid.range_report(1, 0, 1, w).empty());
  for (int k = 0; k < 1000; ++k) {
    const pos_t x1 = 1 + rng() % w, x2 = x1 + rng() % (w - x1 + 1);
    const pos_t y1 = 1 + rng() % w, y2 = y1 + rng() % (w - y1 + 1);
    std::set<std::pair<pos_t, pos_t>> expect, got;
    for (pos_t x = 1; x <= w; ++x) {
      const pos_t y = grid.row_of(x);
      if (x >= x1 && x <= x2 && y >= y1 && y <= y2) expect.insert({x, y});
    }
    for (auto p : grid.range_report(x1, x2, y1, y2)) got.insert({p.x, p.y});
    REQUIRE(got == expect);
  }
}
