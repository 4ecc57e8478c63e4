#pragma once

#include <cstdint>
#include <vector>

#include "btindex/byte_io.hpp"
#include "btindex/types.hpp"

namespace btindex {

/*
    Plain bitvector with rank and select support. Positions are 1-based:
    rank(c, p) counts the c-bits in B[1..p] (so rank(c, 0) = 0) and
    select(c, r) is the position of the r-th c-bit.

    Bits live in 64-bit words. Every 512-bit superblock stores the absolute
    number of ones before it and every word stores a 16-bit count relative
    to its superblock. select binary-searches the superblock counts and then
    scans at most eight words.
*/
class rank_select_bitvector {
 public:
  rank_select_bitvector() { build_index(); }
  explicit rank_select_bitvector(std::vector<bool> const& bits);
  rank_select_bitvector(std::vector<std::uint64_t> words, pos_t size);

  pos_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// Bit at 1-based position p.
  bool operator[](pos_t p) const;

  pos_t rank(bool c, pos_t p) const;
  pos_t rank1(pos_t p) const;
  pos_t rank0(pos_t p) const { return rank(false, p); }

  pos_t select(bool c, pos_t r) const;
  pos_t select1(pos_t r) const { return select(true, r); }
  pos_t select0(pos_t r) const { return select(false, r); }

  pos_t count(bool c) const { return c ? ones_ : size_ - ones_; }

  /// Length as u64 followed by the raw bits, LSB-first, padded to a byte.
  void write(byte_writer& out) const;
  static rank_select_bitvector read(byte_reader& in);

  friend bool operator==(rank_select_bitvector const& a, rank_select_bitvector const& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  static constexpr pos_t kWordsPerSuper = 8;

  void build_index();

  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> super_;
  std::vector<std::uint16_t> sub_;
  pos_t size_ = 0;
  pos_t ones_ = 0;
};

}  // namespace btindex
