#include "btindex/alphabet.hpp"

#include <stdexcept>

namespace btindex {

alphabet alphabet::of(std::span<const std::uint8_t> bytes) {
  std::array<bool, 256> seen{};
  for (auto b : bytes) seen[b] = true;
  std::vector<std::uint8_t> present;
  for (int b = 0; b < 256; ++b)
    if (seen[b]) present.push_back(static_cast<std::uint8_t>(b));
  return from_symbols(std::move(present));
}

alphabet alphabet::from_symbols(std::vector<std::uint8_t> bytes) {
  alphabet a;
  for (std::size_t k = 0; k < bytes.size(); ++k) {
    if (k > 0 && bytes[k] <= bytes[k - 1]) throw std::invalid_argument("alphabet bytes must be strictly increasing");
    a.to_symbol_[bytes[k]] = static_cast<symbol_t>(k + 1);
  }
  a.bytes_ = std::move(bytes);
  return a;
}

std::optional<std::vector<symbol_t>> alphabet::encode(std::span<const std::uint8_t> bytes) const {
  std::vector<symbol_t> out;
  out.reserve(bytes.size());
  for (auto b : bytes) {
    if (to_symbol_[b] == 0) return std::nullopt;
    out.push_back(to_symbol_[b]);
  }
  return out;
}

std::string alphabet::decode(std::span<const symbol_t> symbols) const {
  std::string out;
  out.reserve(symbols.size());
  for (auto s : symbols) {
    if (s < 1 || s > bytes_.size()) throw std::out_of_range("symbol outside alphabet");
    out.push_back(static_cast<char>(bytes_[s - 1]));
  }
  return out;
}

}  // namespace btindex
