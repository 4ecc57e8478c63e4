#pragma once

#include <vector>

#include "btindex/byte_io.hpp"
#include "btindex/types.hpp"

namespace btindex {

/// Permutation of [1..size] with constant-time apply and invert. The
/// inverse is kept in full; only the forward map is serialized.
class invertible_permutation {
 public:
  invertible_permutation() = default;
  /// forward[i-1] = pi(i); must be a bijection on [1..forward.size()].
  explicit invertible_permutation(std::vector<pos_t> forward);

  pos_t size() const { return forward_.size(); }
  pos_t apply(pos_t i) const;
  pos_t invert(pos_t j) const;

  void write(byte_writer& out) const;
  static invertible_permutation read(byte_reader& in);

  friend bool operator==(invertible_permutation const& a, invertible_permutation const& b) {
    return a.forward_ == b.forward_;
  }

 private:
  std::vector<pos_t> forward_;
  std::vector<pos_t> inverse_;
};

}  // namespace btindex
