#include "btindex/rank_select_bitvector.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace btindex {

namespace {

// Position (0-based) of the k-th (0-based) set bit of w.
unsigned select_in_word(std::uint64_t w, unsigned k) {
  for (unsigned i = 0; i < k; ++i) w &= w - 1;
  return static_cast<unsigned>(std::countr_zero(w));
}

}  // namespace

rank_select_bitvector::rank_select_bitvector(std::vector<bool> const& bits)
    : words_((bits.size() + 63) / 64, 0), size_(bits.size()) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  build_index();
}

rank_select_bitvector::rank_select_bitvector(std::vector<std::uint64_t> words, pos_t size)
    : words_(std::move(words)), size_(size) {
  if (words_.size() != (size_ + 63) / 64) throw std::invalid_argument("word count does not match bit length");
  if (size_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
  build_index();
}

void rank_select_bitvector::build_index() {
  const pos_t nw = words_.size();
  super_.assign(nw / kWordsPerSuper + 2, 0);
  sub_.assign(nw, 0);
  pos_t total = 0;
  pos_t in_super = 0;
  for (pos_t w = 0; w < nw; ++w) {
    if (w % kWordsPerSuper == 0) {
      super_[w / kWordsPerSuper] = total;
      in_super = 0;
    }
    sub_[w] = static_cast<std::uint16_t>(in_super);
    const auto pc = static_cast<pos_t>(std::popcount(words_[w]));
    in_super += pc;
    total += pc;
  }
  // Sentinels so that super_[s + 1] is always valid.
  for (pos_t s = (nw + kWordsPerSuper - 1) / kWordsPerSuper; s < super_.size(); ++s) super_[s] = total;
  ones_ = total;
}

bool rank_select_bitvector::operator[](pos_t p) const {
  if (p < 1 || p > size_) throw std::out_of_range("bit position " + std::to_string(p) + " out of range");
  const pos_t i = p - 1;
  return (words_[i / 64] >> (i % 64)) & 1u;
}

pos_t rank_select_bitvector::rank1(pos_t p) const {
  if (p > size_) throw std::out_of_range("rank position " + std::to_string(p) + " out of range");
  if (p == size_) return ones_;
  const pos_t w = p / 64;
  pos_t r = super_[w / kWordsPerSuper] + sub_[w];
  const pos_t rem = p % 64;
  if (rem) r += static_cast<pos_t>(std::popcount(words_[w] & ((std::uint64_t{1} << rem) - 1)));
  return r;
}

pos_t rank_select_bitvector::rank(bool c, pos_t p) const {
  const pos_t r1 = rank1(p);
  return c ? r1 : p - r1;
}

pos_t rank_select_bitvector::select(bool c, pos_t r) const {
  if (r < 1 || r > count(c)) throw std::out_of_range("select rank " + std::to_string(r) + " out of range");
  const pos_t bits_per_super = 64 * kWordsPerSuper;
  // c-bits strictly before superblock s.
  auto before_super = [&](pos_t s) { return c ? super_[s] : s * bits_per_super - super_[s]; };
  const pos_t nsuper = (words_.size() + kWordsPerSuper - 1) / kWordsPerSuper;

  // Last superblock with fewer than r c-bits before it.
  pos_t lo = 0, hi = nsuper - 1;
  while (lo < hi) {
    const pos_t mid = lo + (hi - lo + 1) / 2;
    if (before_super(mid) < r) lo = mid;
    else hi = mid - 1;
  }
  pos_t remaining = r - before_super(lo);
  pos_t w = lo * kWordsPerSuper;
  const pos_t wend = std::min<pos_t>(w + kWordsPerSuper, words_.size());
  for (; w < wend; ++w) {
    std::uint64_t word = c ? words_[w] : ~words_[w];
    auto pc = static_cast<pos_t>(std::popcount(word));
    if (pc >= remaining) return w * 64 + select_in_word(word, static_cast<unsigned>(remaining - 1)) + 1;
    remaining -= pc;
  }
  throw std::logic_error("select index inconsistent");
}

void rank_select_bitvector::write(byte_writer& out) const {
  out.put_u64(size_);
  const pos_t nbytes = (size_ + 7) / 8;
  for (pos_t b = 0; b < nbytes; ++b) out.put_u8(static_cast<std::uint8_t>(words_[b / 8] >> (8 * (b % 8))));
}

rank_select_bitvector rank_select_bitvector::read(byte_reader& in) {
  const pos_t size = in.get_u64();
  const pos_t nbytes = (size + 7) / 8;
  if (nbytes > in.remaining()) throw corrupt_index_error("bitvector payload truncated");
  auto bytes = in.get_bytes(nbytes);
  std::vector<std::uint64_t> words((size + 63) / 64, 0);
  for (pos_t b = 0; b < nbytes; ++b) words[b / 8] |= std::uint64_t{bytes[b]} << (8 * (b % 8));
  if (size % 8 != 0 && (bytes[nbytes - 1] >> (size % 8)) != 0) throw corrupt_index_error("bitvector padding bits set");
  return rank_select_bitvector(std::move(words), size);
}

}  // namespace btindex
