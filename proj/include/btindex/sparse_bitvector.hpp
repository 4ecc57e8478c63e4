#pragma once

#include <vector>

#include "btindex/byte_io.hpp"
#include "btindex/types.hpp"

namespace btindex {

/// Bitvector stored as the sorted positions of its ones. select1 is a
/// direct lookup; rank and select0 binary-search the one positions.
/// Same 1-based contract as rank_select_bitvector.
class sparse_bitvector {
 public:
  sparse_bitvector() = default;
  /// `ones` must be strictly increasing and within [1, universe].
  sparse_bitvector(pos_t universe, std::vector<pos_t> ones);

  pos_t size() const { return universe_; }
  bool operator[](pos_t p) const;

  pos_t rank(bool c, pos_t p) const;
  pos_t rank1(pos_t p) const { return rank(true, p); }
  pos_t rank0(pos_t p) const { return rank(false, p); }

  pos_t select(bool c, pos_t r) const;
  pos_t select1(pos_t r) const;
  pos_t select0(pos_t r) const;

  pos_t count(bool c) const { return c ? ones_.size() : universe_ - ones_.size(); }
  std::vector<pos_t> const& ones() const { return ones_; }

  /// Universe and one count as u64, then the gaps between consecutive
  /// one positions as LEB128 varints.
  void write(byte_writer& out) const;
  static sparse_bitvector read(byte_reader& in);

  friend bool operator==(sparse_bitvector const&, sparse_bitvector const&) = default;

 private:
  pos_t universe_ = 0;
  std::vector<pos_t> ones_;
};

}  // namespace btindex
