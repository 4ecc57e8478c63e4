#include "btindex/wavelet_tree.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace btindex {

wavelet_tree::wavelet_tree(std::vector<pos_t> const& values, pos_t max_value)
    : size_(values.size()), max_value_(max_value) {
  depth_ = std::max(1u, static_cast<unsigned>(std::bit_width(max_value_ > 0 ? max_value_ - 1 : 0)));
  std::vector<pos_t> cur;
  cur.reserve(values.size());
  for (pos_t v : values) {
    if (v < 1 || v > max_value_) throw std::invalid_argument("wavelet tree value out of range");
    cur.push_back(v - 1);
  }
  levels_.reserve(depth_);
  std::vector<bool> bits(size_);
  for (unsigned d = 0; d < depth_; ++d) {
    const unsigned shift = depth_ - 1 - d;
    for (pos_t k = 0; k < size_; ++k) bits[k] = (cur[k] >> shift) & 1u;
    levels_.emplace_back(bits);
    // cur is already grouped by the prefix above this bit, so a stable sort
    // on the longer prefix partitions every node into its two children.
    std::stable_sort(cur.begin(), cur.end(), [shift](pos_t a, pos_t b) { return (a >> shift) < (b >> shift); });
  }
}

pos_t wavelet_tree::access(pos_t x) const {
  if (x < 1 || x > size_) throw std::out_of_range("wavelet tree column " + std::to_string(x) + " out of range");
  pos_t s = 0, e = size_, idx = x - 1, v = 0;
  for (unsigned d = 0; d < depth_; ++d) {
    auto const& bv = levels_[d];
    const pos_t zs = bv.rank0(s);
    const pos_t zeros = bv.rank0(e) - zs;
    const bool bit = bv[s + idx + 1];
    if (!bit) {
      idx = bv.rank0(s + idx) - zs;
      e = s + zeros;
    } else {
      idx = bv.rank1(s + idx) - bv.rank1(s);
      s = s + zeros;
    }
    v = (v << 1) | static_cast<pos_t>(bit);
  }
  return v + 1;
}

std::vector<wavelet_tree::point> wavelet_tree::range_report(pos_t x1, pos_t x2, pos_t y1, pos_t y2) const {
  std::vector<point> out;
  if (x1 > x2 || y1 > y2 || size_ == 0) return out;
  if (x1 < 1 || x2 > size_ || y1 < 1 || y2 > max_value_) throw std::out_of_range("range_report rectangle out of range");
  std::vector<frame> path;
  path.reserve(depth_);
  report(0, 0, size_, x1 - 1, x2, 0, y1 - 1, y2 - 1, path, out);
  return out;
}

void wavelet_tree::report(unsigned d, pos_t s, pos_t e, pos_t a, pos_t b, pos_t vlo, pos_t ylo, pos_t yhi,
                          std::vector<frame>& path, std::vector<point>& out) const {
  if (a >= b) return;
  const pos_t span = pos_t{1} << (depth_ - d);
  const pos_t vhi = vlo + span - 1;
  if (vhi < ylo || vlo > yhi) return;
  if (d == depth_) {
    for (pos_t k = a; k < b; ++k) out.push_back({climb(k, path) + 1, vlo + 1});
    return;
  }
  auto const& bv = levels_[d];
  const pos_t zs = bv.rank0(s);
  const pos_t zeros = bv.rank0(e) - zs;
  const pos_t za = bv.rank0(s + a) - zs;
  const pos_t zb = bv.rank0(s + b) - zs;
  const pos_t half = span / 2;

  path.push_back({s, false});
  report(d + 1, s, s + zeros, za, zb, vlo, ylo, yhi, path, out);
  path.back().bit = true;
  report(d + 1, s + zeros, e, a - za, b - zb, vlo + half, ylo, yhi, path, out);
  path.pop_back();
}

// Maps a position relative to the node at the bottom of `path` back to a
// 0-based root position.
pos_t wavelet_tree::climb(pos_t rel, std::vector<frame> const& path) const {
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto const& bv = levels_[path.size() - 1 - static_cast<std::size_t>(it - path.rbegin())];
    const pos_t before = bv.rank(it->bit, it->start);
    rel = bv.select(it->bit, before + rel + 1) - 1 - it->start;
  }
  return rel;
}

void wavelet_tree::write(byte_writer& out) const {
  out.put_u64(size_);
  out.put_u64(max_value_);
  out.put_u8(static_cast<std::uint8_t>(depth_));
  for (auto const& bv : levels_) bv.write(out);
}

wavelet_tree wavelet_tree::read(byte_reader& in) {
  wavelet_tree wt;
  wt.size_ = in.get_u64();
  wt.max_value_ = in.get_u64();
  wt.depth_ = in.get_u8();
  const unsigned expect = std::max(1u, static_cast<unsigned>(std::bit_width(wt.max_value_ > 0 ? wt.max_value_ - 1 : 0)));
  if (wt.depth_ != expect) throw corrupt_index_error("wavelet tree depth mismatch");
  for (unsigned d = 0; d < wt.depth_; ++d) {
    wt.levels_.push_back(rank_select_bitvector::read(in));
    if (wt.levels_.back().size() != wt.size_) throw corrupt_index_error("wavelet tree level length mismatch");
  }
  return wt;
}

}  // namespace btindex
