#include "btindex/occurrence_grid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace btindex {

namespace {

struct pair_seed {
  pos_t t;          // X string start in S (1-based)
  pos_t x_len;
  pos_t y_len;
  bool top;         // level-0 boundary: X is a whole suffix
};

}  // namespace

occurrence_grid::occurrence_grid(wavelet_tree col_to_row, packed_ints positions, pos_t b0, pos_t n)
    : col_to_row_(std::move(col_to_row)), positions_(std::move(positions)), b0_(b0), n_(n) {
  if (positions_.size() != col_to_row_.size() || col_to_row_.max_value() != col_to_row_.size())
    throw std::invalid_argument("grid sizes disagree");
  for (std::size_t y = 0; y < positions_.size(); ++y) {
    if (positions_[y] < 2 || positions_[y] > n_) throw std::invalid_argument("grid position out of range");
  }
}

occurrence_grid occurrence_grid::build(block_tree const& tree, std::span<const symbol_t> padded,
                                       std::span<const pos_t> suffix_rank) {
  auto const& shape = tree.shape();
  const pos_t b0 = shape.b0;
  std::vector<pair_seed> seeds;
  seeds.reserve(tree.internal_count() + shape.z_top);

  // Splits of marked blocks: the midpoint in S_l, projected up to S.
  for (std::size_t l = 0; l < tree.last_level(); ++l) {
    auto const& lv = tree.level(l);
    const pos_t half = lv.block_length / 2;
    const pos_t marked = lv.marked.count(true);
    for (pos_t e = 1; e <= marked; ++e) {
      const pos_t j = lv.marked.select1(e);
      pos_t i = (j - 1) * lv.block_length + half + 1;
      for (std::size_t up = l; up > 0; --up) i = tree.project_up(up, i);
      seeds.push_back({i, half, half, false});
    }
  }
  for (pos_t i = 1; i < shape.z_top; ++i) {
    const pos_t t = i * b0 + 1;
    if (t > suffix_rank.size()) throw std::logic_error("level-0 boundary beyond terminated text");
    seeds.push_back({t, shape.n - t + 1, b0, true});
  }

  auto at = [&](pos_t p) { return padded[p - 1]; };
  auto x_less = [&](pos_t a, pos_t b) {
    auto const& A = seeds[a];
    auto const& B = seeds[b];
    if (A.top && B.top) return suffix_rank[A.t - 1] < suffix_rank[B.t - 1];
    const pos_t len = std::min(A.x_len, B.x_len);
    for (pos_t k = 0; k < len; ++k) {
      const symbol_t ca = at(A.t + k), cb = at(B.t + k);
      if (ca != cb) return ca < cb;
    }
    if (A.x_len != B.x_len) return A.x_len < B.x_len;
    return A.t < B.t;
  };
  auto y_less = [&](pos_t a, pos_t b) {
    auto const& A = seeds[a];
    auto const& B = seeds[b];
    const pos_t len = std::min(A.y_len, B.y_len);
    for (pos_t k = 1; k <= len; ++k) {
      const symbol_t ca = at(A.t - k), cb = at(B.t - k);
      if (ca != cb) return ca < cb;
    }
    if (A.y_len != B.y_len) return A.y_len < B.y_len;
    return A.t < B.t;
  };

  const pos_t count = seeds.size();
  std::vector<pos_t> by_x(count), by_y(count);
  std::iota(by_x.begin(), by_x.end(), pos_t{0});
  std::iota(by_y.begin(), by_y.end(), pos_t{0});
  std::sort(by_x.begin(), by_x.end(), x_less);
  std::sort(by_y.begin(), by_y.end(), y_less);

  std::vector<pos_t> row_of_seed(count);
  std::vector<std::uint64_t> positions(count);
  for (pos_t y = 0; y < count; ++y) {
    row_of_seed[by_y[y]] = y + 1;
    positions[y] = seeds[by_y[y]].t;
  }
  std::vector<pos_t> col_to_row(count);
  for (pos_t x = 0; x < count; ++x) col_to_row[x] = row_of_seed[by_x[x]];

  return occurrence_grid(wavelet_tree(col_to_row, count), packed_ints(positions), b0, shape.n);
}

pos_t occurrence_grid::position(pos_t y) const {
  if (y < 1 || y > positions_.size()) throw std::out_of_range("grid row " + std::to_string(y) + " out of range");
  return positions_[y - 1];
}

string_bounds string_bounds_at(pos_t t, pos_t b0, pos_t n) {
  if ((t - 1) % b0 == 0) return {t, n - t + 1, b0};
  // T - 1 = (2A + 1) * b_{l+1} for a split at level l.
  const pos_t half = pos_t{1} << std::countr_zero(t - 1);
  return {t, half, half};
}

string_bounds occurrence_grid::x_string_bounds(pos_t y) const { return string_bounds_at(position(y), b0_, n_); }

ordering occurrence_grid::compare_row(block_tree const& tree, pos_t y, std::span<const symbol_t> q,
                                      bool forward) const {
  const auto bounds = x_string_bounds(y);
  const pos_t max_len = forward ? bounds.x_max_len : bounds.y_max_len;
  const pos_t len = std::min<pos_t>(q.size(), max_len);
  for (pos_t k = 0; k < len; ++k) {
    const symbol_t c = forward ? tree.symbol_at(bounds.start + k) : tree.symbol_at(bounds.start - 1 - k);
    if (c < q[k]) return ordering::less;
    if (c > q[k]) return ordering::greater;
  }
  // A grid string that is a proper prefix of q sorts before it.
  return q.size() <= max_len ? ordering::prefix : ordering::less;
}

ordering occurrence_grid::compare_x(block_tree const& tree, pos_t x, std::span<const symbol_t> q) const {
  return compare_row(tree, row_of(x), q, true);
}

ordering occurrence_grid::compare_y(block_tree const& tree, pos_t y, std::span<const symbol_t> q_rev) const {
  return compare_row(tree, y, q_rev, false);
}

}  // namespace btindex
