#pragma once

#include <cstdint>
#include <vector>

#include "btindex/byte_io.hpp"
#include "btindex/types.hpp"

namespace btindex {

/// Fixed-width bit-packed array of unsigned integers (0-based indexing).
class packed_ints {
 public:
  packed_ints() = default;
  /// Width is the bit width of the largest value (at least 1).
  explicit packed_ints(std::vector<std::uint64_t> const& values);

  std::size_t size() const { return size_; }
  unsigned width() const { return width_; }
  std::uint64_t operator[](std::size_t i) const;
  std::vector<std::uint64_t> to_vector() const;

  /// u8 width, u64 count, then count*width bits LSB-first padded to a byte.
  void write(byte_writer& out) const;
  static packed_ints read(byte_reader& in);

  friend bool operator==(packed_ints const&, packed_ints const&) = default;

 private:
  void set(std::size_t i, std::uint64_t v);

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
  unsigned width_ = 1;
};

}  // namespace btindex
