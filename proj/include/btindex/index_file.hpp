#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "btindex/alphabet.hpp"
#include "btindex/index.hpp"

namespace btindex {

/*
    On-disk index layout (all integers little-endian):

      "BTIX"  u32 version
      header  u64 x 9: sigma, n_original, n, z, z_top, b0, levels, w, num_points
      u32 section count, then per section: u32 tag, u64 offset, u64 length
      sections: ALPH (alphabet bytes), LEVL (per level: b_l, D_l, F_l, pi_l),
                LEAF (packed last-level symbols), GRID (wavelet tree levels),
                TPOS (packed T)
      u32 CRC-32 of every preceding byte
*/
inline constexpr std::uint32_t kIndexFormatVersion = 1;

struct stored_index {
  alphabet symbols;
  bt_index index;
};

std::vector<std::uint8_t> serialize_index(alphabet const& symbols, bt_index const& index);
/// Throws corrupt_index_error on any format, checksum or consistency failure.
stored_index deserialize_index(std::span<const std::uint8_t> bytes);

/// Builds an index over raw bytes with a dense byte alphabet.
stored_index build_byte_index(std::span<const std::uint8_t> bytes);

}  // namespace btindex
