#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "btindex/types.hpp"

namespace btindex {

/// Dense, order-preserving map between the byte values present in an input
/// and symbols 1..sigma.
class alphabet {
 public:
  alphabet() = default;
  static alphabet of(std::span<const std::uint8_t> bytes);
  /// `bytes` must be strictly increasing.
  static alphabet from_symbols(std::vector<std::uint8_t> bytes);

  symbol_t sigma() const { return static_cast<symbol_t>(bytes_.size()); }
  std::vector<std::uint8_t> const& bytes() const { return bytes_; }

  /// Maps every byte; nullopt if any byte is not part of the alphabet.
  std::optional<std::vector<symbol_t>> encode(std::span<const std::uint8_t> bytes) const;
  std::string decode(std::span<const symbol_t> symbols) const;

  friend bool operator==(alphabet const&, alphabet const&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::array<symbol_t, 256> to_symbol_{};
};

}  // namespace btindex
