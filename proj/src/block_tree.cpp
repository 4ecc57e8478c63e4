#include "btindex/block_tree.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace btindex {

namespace {

constexpr pos_t kNone = std::numeric_limits<pos_t>::max();

// Karp-Rabin over the Mersenne prime 2^61 - 1.
constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kBase = 0x1234567891ULL % kMod;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kMod) + static_cast<std::uint64_t>(p >> 61);
  return r >= kMod ? r - kMod : r;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r >= kMod ? r - kMod : r;
}

class rolling_window {
 public:
  rolling_window(std::span<const symbol_t> s, pos_t len) : s_(s), len_(len) {
    top_ = 1;
    for (pos_t k = 1; k < len_; ++k) top_ = mul_mod(top_, kBase);
    for (pos_t k = 0; k < len_; ++k) h_ = add_mod(mul_mod(h_, kBase), s_[k]);
  }

  pos_t position() const { return q_; }
  std::uint64_t hash() const { return h_; }
  bool can_advance() const { return q_ + len_ < s_.size(); }
  void advance() {
    const std::uint64_t drop = mul_mod(top_, s_[q_]);
    h_ = add_mod(mul_mod(add_mod(h_, kMod - drop), kBase), s_[q_ + len_]);
    ++q_;
  }

 private:
  std::span<const symbol_t> s_;
  pos_t len_;
  std::uint64_t top_ = 1;
  std::uint64_t h_ = 0;
  pos_t q_ = 0;
};

bool same_window(std::span<const symbol_t> s, pos_t a, pos_t b, pos_t len) {
  return std::equal(s.begin() + static_cast<std::ptrdiff_t>(a), s.begin() + static_cast<std::ptrdiff_t>(a + len),
                    s.begin() + static_cast<std::ptrdiff_t>(b));
}

// For each 0-based window start in `queries` (ascending), the leftmost
// 0-based start of an equal window in s. Fingerprint hits are verified
// symbol by symbol, so the answer is exact.
std::vector<pos_t> leftmost_occurrences(std::span<const symbol_t> s, pos_t len, std::vector<pos_t> const& queries) {
  std::vector<pos_t> result(queries.size(), kNone);
  if (queries.empty()) return result;

  // Group queries by content; each group keeps its first member as representative.
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::vector<pos_t> rep;
  std::vector<std::size_t> group_of(queries.size());
  {
    rolling_window win(s, len);
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
      while (win.position() < queries[qi]) win.advance();
      auto& bucket = buckets[win.hash()];
      std::size_t g = kNone;
      for (std::size_t cand : bucket) {
        if (same_window(s, rep[cand], queries[qi], len)) {
          g = cand;
          break;
        }
      }
      if (g == kNone) {
        g = rep.size();
        rep.push_back(queries[qi]);
        bucket.push_back(g);
      }
      group_of[qi] = g;
    }
  }

  std::vector<pos_t> first(rep.size(), kNone);
  std::size_t unresolved = rep.size();
  rolling_window win(s, len);
  for (;;) {
    auto it = buckets.find(win.hash());
    if (it != buckets.end()) {
      const pos_t q = win.position();
      for (std::size_t g : it->second) {
        if (first[g] == kNone && same_window(s, q, rep[g], len)) {
          first[g] = q;
          --unresolved;
        }
      }
    }
    if (unresolved == 0 || win.position() >= queries.back() || !win.can_advance()) break;
    win.advance();
  }
  for (std::size_t qi = 0; qi < queries.size(); ++qi) result[qi] = first[group_of[qi]];
  return result;
}

pos_t ceil_div(pos_t a, pos_t b) { return (a + b - 1) / b; }

[[noreturn]] void invariant_violation(std::string const& what) {
  throw std::logic_error("block tree invariant violated: " + what);
}

}  // namespace

block_tree_shape compute_shape(symbol_t sigma, pos_t n_original, pos_t z) {
  if (n_original == 0 || z == 0 || z > n_original) throw std::invalid_argument("invalid text length or phrase count");
  const pos_t terminated = n_original + 1;
  pos_t b0 = 1;
  while (b0 * z < terminated) b0 <<= 1;
  block_tree_shape shape;
  shape.sigma = sigma;
  shape.n_original = n_original;
  shape.z = z;
  shape.b0 = b0;
  shape.z_top = ceil_div(terminated, b0);
  shape.n = shape.z_top * b0;
  return shape;
}

void level_data::write(byte_writer& out) const {
  out.put_u64(block_length);
  marked.write(out);
  sources.write(out);
  source_order.write(out);
}

level_data level_data::read(byte_reader& in) {
  level_data lv;
  lv.block_length = in.get_u64();
  lv.marked = rank_select_bitvector::read(in);
  lv.sources = sparse_bitvector::read(in);
  lv.source_order = invertible_permutation::read(in);
  return lv;
}

block_tree::block_tree(block_tree_shape shape, std::vector<level_data> levels, packed_ints leaf_symbols)
    : shape_(shape), levels_(std::move(levels)), leaves_(std::move(leaf_symbols)) {
  auto fail = [](std::string const& what) { throw std::invalid_argument("inconsistent block tree: " + what); };
  if (shape_.b0 < 2 || !std::has_single_bit(shape_.b0)) fail("b0 must be a power of two >= 2");
  if (shape_.n != shape_.z_top * shape_.b0 || shape_.n <= shape_.n_original) fail("padded length");
  if (levels_.size() != static_cast<std::size_t>(std::countr_zero(shape_.b0)) + 1) fail("level count");
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    auto const& lv = levels_[l];
    const pos_t expect_blocks = l == 0 ? shape_.z_top : 2 * levels_[l - 1].marked.count(true);
    if (lv.block_length != (shape_.b0 >> l)) fail("block length at level " + std::to_string(l));
    if (lv.marked.size() != expect_blocks) fail("|D_l| at level " + std::to_string(l));
    const pos_t w = lv.unmarked_count();
    const pos_t nl = lv.explicit_length();
    if (lv.sources.size() != nl + w || lv.sources.count(true) != w) fail("F_l size at level " + std::to_string(l));
    if (lv.source_order.size() != w) fail("pi_l size at level " + std::to_string(l));
    // Each source must lie on marked blocks of its own level.
    for (pos_t t = 1; t <= w; ++t) {
      const pos_t start = lv.sources.select1(t) - t;
      const pos_t b = lv.block_length;
      if (start < 1 || start + b - 1 > nl) fail("source outside S_l");
      if (!lv.marked[ceil_div(start, b)] || !lv.marked[ceil_div(start + b - 1, b)]) fail("source over unmarked block");
    }
  }
  if (levels_.back().block_length != 1) fail("last level block length");
  if (leaves_.size() != levels_.back().marked.count(true)) fail("leaf symbol count");
  for (std::size_t k = 0; k < leaves_.size(); ++k) {
    if (leaves_[k] < 1 || leaves_[k] > shape_.padding()) fail("leaf symbol out of range");
  }
}

block_tree block_tree::build(std::span<const symbol_t> padded, block_tree_shape const& shape) {
  if (padded.size() != shape.n) throw std::invalid_argument("padded text length does not match shape");
  const std::size_t last = static_cast<std::size_t>(std::countr_zero(shape.b0));

  std::vector<level_data> levels;
  std::vector<std::uint64_t> leaves;
  // 0-based start in S of every explicit block of the current level.
  std::vector<pos_t> starts(shape.z_top);
  for (pos_t j = 0; j < shape.z_top; ++j) starts[j] = j * shape.b0;

  for (std::size_t l = 0; l <= last; ++l) {
    const pos_t b = shape.b0 >> l;
    const pos_t k = starts.size();
    std::vector<bool> mark(k, k == 1);

    std::vector<pos_t> pair_at;
    std::vector<pos_t> pair_block;
    for (pos_t j = 0; j + 1 < k; ++j) {
      if (starts[j + 1] == starts[j] + b) {
        pair_at.push_back(starts[j]);
        pair_block.push_back(j);
      }
    }
    auto pair_first = leftmost_occurrences(padded, 2 * b, pair_at);
    for (std::size_t p = 0; p < pair_at.size(); ++p) {
      if (pair_first[p] == pair_at[p]) mark[pair_block[p]] = mark[pair_block[p] + 1] = true;
    }

    std::vector<pos_t> unmarked_at;
    std::vector<pos_t> unmarked_block;
    for (pos_t j = 0; j < k; ++j) {
      if (!mark[j]) {
        unmarked_at.push_back(starts[j]);
        unmarked_block.push_back(j);
      }
    }
    auto source_first = leftmost_occurrences(padded, b, unmarked_at);

    // Source starts in S_l coordinates (1-based), per unmarked rank.
    const pos_t w = unmarked_at.size();
    std::vector<pos_t> source_start(w);
    for (pos_t r = 0; r < w; ++r) {
      const pos_t q = source_first[r];
      const pos_t block_start = unmarked_at[r];
      if (q == kNone || q >= block_start)
        invariant_violation("unmarked block at level " + std::to_string(l) + " has no earlier occurrence");
      auto it = std::upper_bound(starts.begin(), starts.end(), q);
      const auto e = static_cast<pos_t>(it - starts.begin()) - 1;
      if (it == starts.begin() || q >= starts[e] + b)
        invariant_violation("source at level " + std::to_string(l) + " starts outside explicit blocks");
      if (!mark[e]) invariant_violation("source at level " + std::to_string(l) + " overlaps an unmarked block");
      if (q != starts[e]) {
        if (e + 1 >= k || starts[e + 1] != starts[e] + b || !mark[e + 1])
          invariant_violation("source at level " + std::to_string(l) + " does not lie on adjacent marked blocks");
      }
      if (q + b > block_start) invariant_violation("source overlaps its own block");
      source_start[r] = e * b + (q - starts[e]) + 1;
    }

    // F_l lists sources by start; ties keep unmarked-rank order.
    std::vector<pos_t> order(w);
    std::iota(order.begin(), order.end(), pos_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](pos_t a, pos_t c) { return source_start[a] < source_start[c]; });
    std::vector<pos_t> ones(w);
    std::vector<pos_t> pi(w);
    for (pos_t t = 0; t < w; ++t) {
      ones[t] = source_start[order[t]] + (t + 1);
      pi[order[t]] = t + 1;
    }

    level_data lv;
    lv.block_length = b;
    lv.marked = rank_select_bitvector(mark);
    lv.sources = sparse_bitvector(k * b + w, std::move(ones));
    lv.source_order = invertible_permutation(std::move(pi));
    levels.push_back(std::move(lv));

    if (l == last) {
      for (pos_t j = 0; j < k; ++j)
        if (mark[j]) leaves.push_back(padded[starts[j]]);
      break;
    }
    std::vector<pos_t> next;
    next.reserve(2 * k);
    for (pos_t j = 0; j < k; ++j) {
      if (mark[j]) {
        next.push_back(starts[j]);
        next.push_back(starts[j] + b / 2);
      }
    }
    starts.swap(next);
  }
  return block_tree(shape, std::move(levels), packed_ints(leaves));
}

symbol_t block_tree::symbol_at(pos_t i) const {
  if (i < 1 || i > shape_.n) throw std::out_of_range("text position " + std::to_string(i) + " out of range");
  const std::size_t last = last_level();
  for (std::size_t l = 0;; ++l) {
    auto const& lv = levels_[l];
    const pos_t b = lv.block_length;
    pos_t j = ceil_div(i, b);
    if (!lv.marked[j]) {
      const pos_t r = lv.marked.rank0(j);
      const pos_t t = lv.source_order.apply(r);
      const pos_t p = lv.sources.select1(t);
      const pos_t s = (j - 1) * b + 1;
      i = (p - t) + (i - s);
      j = ceil_div(i, b);
    }
    if (l == last) return static_cast<symbol_t>(leaves_[lv.marked.rank1(j) - 1]);
    i = (lv.marked.rank1(j) - 1) * b + ((i - 1) % b) + 1;
  }
}

std::vector<symbol_t> block_tree::extract(pos_t i, pos_t len) const {
  if (i < 1 || (len > 0 && (i > shape_.n_original || len > shape_.n_original - i + 1)) ||
      (len == 0 && i > shape_.n_original + 1))
    throw std::out_of_range("extract range out of bounds");
  std::vector<symbol_t> out;
  out.reserve(len);
  for (pos_t k = 0; k < len; ++k) out.push_back(symbol_at(i + k));
  return out;
}

pos_t project_down(rank_select_bitvector const& d, pos_t b, pos_t i) {
  if (i < 1 || i > d.size() * b) throw std::out_of_range("position out of range");
  const pos_t j = ceil_div(i, b);
  if (!d[j]) throw std::invalid_argument("block " + std::to_string(j) + " is not marked");
  return (d.rank1(j) - 1) * b + ((i - 1) % b) + 1;
}

pos_t project_up(rank_select_bitvector const& parent_d, pos_t parent_b, pos_t i) {
  const pos_t j = ceil_div(i, parent_b);
  if (i < 1 || j > parent_d.count(true)) throw std::out_of_range("position out of range");
  return (parent_d.select1(j) - 1) * parent_b + ((i - 1) % parent_b) + 1;
}

pos_t block_tree::project_down(std::size_t l, pos_t i) const {
  if (l >= last_level()) throw std::out_of_range("cannot project below the last level");
  return btindex::project_down(levels_[l].marked, levels_[l].block_length, i);
}

pos_t block_tree::project_up(std::size_t l, pos_t i) const {
  if (l < 1 || l > last_level()) throw std::out_of_range("project_up needs 1 <= l <= L");
  if (i < 1 || i > levels_[l].explicit_length()) throw std::out_of_range("position out of range");
  return btindex::project_up(levels_[l - 1].marked, levels_[l - 1].block_length, i);
}

pos_t block_tree::source_position(std::size_t l, pos_t r) const {
  auto const& lv = levels_.at(l);
  if (r < 1 || r > lv.unmarked_count()) throw std::out_of_range("unmarked rank " + std::to_string(r) + " out of range");
  const pos_t t = lv.source_order.apply(r);
  return lv.sources.select1(t) - t;
}

pos_t block_tree::internal_count() const {
  pos_t c = 0;
  for (std::size_t l = 0; l + 1 < levels_.size(); ++l) c += levels_[l].marked.count(true);
  return c;
}

pos_t block_tree::unmarked_total() const {
  pos_t c = 0;
  for (auto const& lv : levels_) c += lv.unmarked_count();
  return c;
}

pos_t block_tree::leaf_count() const { return unmarked_total() + levels_.back().marked.count(true); }

}  // namespace btindex
