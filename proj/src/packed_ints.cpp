#include "btindex/packed_ints.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace btindex {

packed_ints::packed_ints(std::vector<std::uint64_t> const& values) : size_(values.size()) {
  std::uint64_t mx = 0;
  for (auto v : values) mx = std::max(mx, v);
  width_ = std::max(1u, static_cast<unsigned>(std::bit_width(mx)));
  words_.assign((size_ * width_ + 63) / 64, 0);
  for (std::size_t i = 0; i < size_; ++i) set(i, values[i]);
}

void packed_ints::set(std::size_t i, std::uint64_t v) {
  const std::size_t bit = i * width_;
  const std::size_t w = bit / 64, off = bit % 64;
  words_[w] |= v << off;
  if (off + width_ > 64) words_[w + 1] |= v >> (64 - off);
}

std::uint64_t packed_ints::operator[](std::size_t i) const {
  if (i >= size_) throw std::out_of_range("packed index out of range");
  const std::size_t bit = i * width_;
  const std::size_t w = bit / 64, off = bit % 64;
  std::uint64_t v = words_[w] >> off;
  if (off + width_ > 64) v |= words_[w + 1] << (64 - off);
  return width_ == 64 ? v : v & ((std::uint64_t{1} << width_) - 1);
}

std::vector<std::uint64_t> packed_ints::to_vector() const {
  std::vector<std::uint64_t> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = (*this)[i];
  return out;
}

void packed_ints::write(byte_writer& out) const {
  out.put_u8(static_cast<std::uint8_t>(width_));
  out.put_u64(size_);
  const std::size_t nbytes = (size_ * width_ + 7) / 8;
  for (std::size_t b = 0; b < nbytes; ++b) out.put_u8(static_cast<std::uint8_t>(words_[b / 8] >> (8 * (b % 8))));
}

packed_ints packed_ints::read(byte_reader& in) {
  packed_ints p;
  p.width_ = in.get_u8();
  p.size_ = in.get_u64();
  if (p.width_ < 1 || p.width_ > 64) throw corrupt_index_error("packed width out of range");
  if (p.size_ > in.remaining() * 8) throw corrupt_index_error("packed array truncated");
  const std::size_t nbits = p.size_ * p.width_;
  const std::size_t nbytes = (nbits + 7) / 8;
  auto bytes = in.get_bytes(nbytes);
  p.words_.assign((nbits + 63) / 64, 0);
  for (std::size_t b = 0; b < nbytes; ++b) p.words_[b / 8] |= std::uint64_t{bytes[b]} << (8 * (b % 8));
  if (nbits % 64 != 0 && !p.words_.empty()) {
    if (p.words_.back() >> (nbits % 64)) throw corrupt_index_error("packed array padding bits set");
  }
  return p;
}

}  // namespace btindex
