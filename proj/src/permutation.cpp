#include "btindex/permutation.hpp"

#include <stdexcept>
#include <string>

#include "btindex/packed_ints.hpp"

namespace btindex {

invertible_permutation::invertible_permutation(std::vector<pos_t> forward)
    : forward_(std::move(forward)), inverse_(forward_.size(), 0) {
  for (pos_t i = 0; i < forward_.size(); ++i) {
    const pos_t j = forward_[i];
    if (j < 1 || j > forward_.size() || inverse_[j - 1] != 0) throw std::invalid_argument("not a permutation");
    inverse_[j - 1] = i + 1;
  }
}

pos_t invertible_permutation::apply(pos_t i) const {
  if (i < 1 || i > forward_.size()) throw std::out_of_range("permutation index " + std::to_string(i) + " out of range");
  return forward_[i - 1];
}

pos_t invertible_permutation::invert(pos_t j) const {
  if (j < 1 || j > inverse_.size()) throw std::out_of_range("permutation value " + std::to_string(j) + " out of range");
  return inverse_[j - 1];
}

void invertible_permutation::write(byte_writer& out) const {
  packed_ints(std::vector<std::uint64_t>(forward_.begin(), forward_.end())).write(out);
}

invertible_permutation invertible_permutation::read(byte_reader& in) {
  auto values = packed_ints::read(in).to_vector();
  try {
    return invertible_permutation(std::vector<pos_t>(values.begin(), values.end()));
  } catch (std::invalid_argument const&) {
    throw corrupt_index_error("stored permutation is not a bijection");
  }
}

}  // namespace btindex
