#include "btindex/sparse_bitvector.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace btindex {

sparse_bitvector::sparse_bitvector(pos_t universe, std::vector<pos_t> ones)
    : universe_(universe), ones_(std::move(ones)) {
  for (std::size_t j = 0; j < ones_.size(); ++j) {
    if (ones_[j] < 1 || ones_[j] > universe_ || (j > 0 && ones_[j] <= ones_[j - 1]))
      throw std::invalid_argument("sparse bitvector positions must be strictly increasing within the universe");
  }
}

bool sparse_bitvector::operator[](pos_t p) const {
  if (p < 1 || p > universe_) throw std::out_of_range("bit position " + std::to_string(p) + " out of range");
  return std::binary_search(ones_.begin(), ones_.end(), p);
}

pos_t sparse_bitvector::rank(bool c, pos_t p) const {
  if (p > universe_) throw std::out_of_range("rank position " + std::to_string(p) + " out of range");
  const auto r1 = static_cast<pos_t>(std::upper_bound(ones_.begin(), ones_.end(), p) - ones_.begin());
  return c ? r1 : p - r1;
}

pos_t sparse_bitvector::select(bool c, pos_t r) const { return c ? select1(r) : select0(r); }

pos_t sparse_bitvector::select1(pos_t r) const {
  if (r < 1 || r > ones_.size()) throw std::out_of_range("select1 rank " + std::to_string(r) + " out of range");
  return ones_[r - 1];
}

pos_t sparse_bitvector::select0(pos_t r) const {
  if (r < 1 || r > count(false)) throw std::out_of_range("select0 rank " + std::to_string(r) + " out of range");
  // The j-th one (1-based) has ones_[j-1] - j zeros before it, a
  // non-decreasing sequence; the ones preceding the r-th zero are exactly
  // those with fewer than r zeros before them.
  pos_t lo = 0, hi = ones_.size();
  while (lo < hi) {
    const pos_t mid = lo + (hi - lo) / 2;
    if (ones_[mid] - (mid + 1) < r) lo = mid + 1;
    else hi = mid;
  }
  return r + lo;
}

void sparse_bitvector::write(byte_writer& out) const {
  out.put_u64(universe_);
  out.put_u64(ones_.size());
  pos_t prev = 0;
  for (pos_t p : ones_) {
    out.put_varint(p - prev);
    prev = p;
  }
}

sparse_bitvector sparse_bitvector::read(byte_reader& in) {
  const pos_t universe = in.get_u64();
  const pos_t count = in.get_u64();
  if (count > universe || count > in.remaining()) throw corrupt_index_error("sparse bitvector count out of range");
  std::vector<pos_t> ones;
  ones.reserve(count);
  pos_t prev = 0;
  for (pos_t j = 0; j < count; ++j) {
    const pos_t gap = in.get_varint();
    if (gap == 0 || gap > universe - prev) throw corrupt_index_error("sparse bitvector gap out of range");
    prev += gap;
    ones.push_back(prev);
  }
  return sparse_bitvector(universe, std::move(ones));
}

}  // namespace btindex
