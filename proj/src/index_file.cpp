#include "btindex/index_file.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <stdexcept>
#include <string>

#include <zlib.h>

namespace btindex {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'B', 'T', 'I', 'X'};

constexpr std::uint32_t tag(char const (&s)[5]) {
  return std::uint32_t(std::uint8_t(s[0])) | std::uint32_t(std::uint8_t(s[1])) << 8 |
         std::uint32_t(std::uint8_t(s[2])) << 16 | std::uint32_t(std::uint8_t(s[3])) << 24;
}

constexpr std::uint32_t kAlph = tag("ALPH");
constexpr std::uint32_t kLevl = tag("LEVL");
constexpr std::uint32_t kLeaf = tag("LEAF");
constexpr std::uint32_t kGrid = tag("GRID");
constexpr std::uint32_t kTpos = tag("TPOS");
constexpr std::array<std::uint32_t, 5> kSections{kAlph, kLevl, kLeaf, kGrid, kTpos};

constexpr std::size_t kHeaderFields = 9;
constexpr std::size_t kSectionEntry = 4 + 8 + 8;

std::uint32_t crc32_of(std::span<const std::uint8_t> bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed in chunks.
  std::size_t off = 0;
  while (off < bytes.size()) {
    const std::size_t chunk = std::min<std::size_t>(bytes.size() - off, 1u << 30);
    crc = crc32(crc, bytes.data() + off, static_cast<uInt>(chunk));
    off += chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace

std::vector<std::uint8_t> serialize_index(alphabet const& symbols, bt_index const& index) {
  auto const& tree = index.tree;
  auto const& shape = tree.shape();
  if (symbols.sigma() != shape.sigma) throw std::invalid_argument("alphabet does not match index");

  std::array<byte_writer, kSections.size()> sections;
  sections[0].put_bytes(symbols.bytes());
  for (std::size_t l = 0; l < tree.level_count(); ++l) tree.level(l).write(sections[1]);
  tree.leaf_symbols().write(sections[2]);
  index.grid.points().write(sections[3]);
  index.grid.positions().write(sections[4]);

  byte_writer out;
  out.put_bytes(kMagic);
  out.put_u32(kIndexFormatVersion);
  for (std::uint64_t v : {std::uint64_t{shape.sigma}, shape.n_original, shape.n, shape.z, shape.z_top, shape.b0,
                          std::uint64_t{tree.level_count()}, tree.leaf_count(), index.grid.size()})
    out.put_u64(v);
  out.put_u32(static_cast<std::uint32_t>(sections.size()));
  std::uint64_t offset = out.size() + sections.size() * kSectionEntry;
  for (std::size_t s = 0; s < sections.size(); ++s) {
    out.put_u32(kSections[s]);
    out.put_u64(offset);
    out.put_u64(sections[s].size());
    offset += sections[s].size();
  }
  for (auto const& s : sections) out.put_bytes(s.bytes());
  out.put_u32(crc32_of(out.bytes()));
  return out.take();
}

stored_index deserialize_index(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size() + 4 + 4) throw corrupt_index_error("file too short");
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) throw corrupt_index_error("bad magic");
  const auto body = bytes.first(bytes.size() - 4);
  byte_reader trailer(bytes.last(4));
  if (trailer.get_u32() != crc32_of(body)) throw corrupt_index_error("checksum mismatch");

  byte_reader in(body);
  in.get_bytes(kMagic.size());
  const std::uint32_t version = in.get_u32();
  if (version != kIndexFormatVersion) throw corrupt_index_error("unsupported format version " + std::to_string(version));
  std::array<std::uint64_t, kHeaderFields> h{};
  for (auto& v : h) v = in.get_u64();
  block_tree_shape shape;
  if (h[0] < 1 || h[0] > 256) throw corrupt_index_error("alphabet size out of range");
  shape.sigma = static_cast<symbol_t>(h[0]);
  shape.n_original = h[1];
  shape.n = h[2];
  shape.z = h[3];
  shape.z_top = h[4];
  shape.b0 = h[5];
  const std::uint64_t level_count = h[6], w = h[7], num_points = h[8];

  const std::uint32_t nsections = in.get_u32();
  if (nsections != kSections.size()) throw corrupt_index_error("unexpected section count");
  std::array<std::span<const std::uint8_t>, kSections.size()> payload;
  for (std::size_t s = 0; s < kSections.size(); ++s) {
    const std::uint32_t t = in.get_u32();
    const std::uint64_t off = in.get_u64(), len = in.get_u64();
    if (t != kSections[s]) throw corrupt_index_error("unexpected section tag");
    if (off > body.size() || len > body.size() - off) throw corrupt_index_error("section out of bounds");
    payload[s] = body.subspan(off, len);
  }

  try {
    stored_index out;
    out.symbols = alphabet::from_symbols(std::vector<std::uint8_t>(payload[0].begin(), payload[0].end()));
    if (out.symbols.sigma() != shape.sigma) throw corrupt_index_error("alphabet section does not match header");

    byte_reader lv_in(payload[1]);
    std::vector<level_data> levels;
    for (std::uint64_t l = 0; l < level_count; ++l) {
      if (lv_in.at_end()) throw corrupt_index_error("missing level data");
      levels.push_back(level_data::read(lv_in));
    }
    byte_reader leaf_in(payload[2]);
    auto leaves = packed_ints::read(leaf_in);
    byte_reader grid_in(payload[3]);
    auto points = wavelet_tree::read(grid_in);
    byte_reader pos_in(payload[4]);
    auto positions = packed_ints::read(pos_in);
    if (!lv_in.at_end() || !leaf_in.at_end() || !grid_in.at_end() || !pos_in.at_end())
      throw corrupt_index_error("trailing bytes in section");

    out.index.tree = block_tree(shape, std::move(levels), std::move(leaves));
    out.index.grid = occurrence_grid(std::move(points), std::move(positions), shape.b0, shape.n);
    if (out.index.tree.leaf_count() != w || out.index.grid.size() != num_points ||
        num_points + 1 != w)
      throw corrupt_index_error("header counts do not match contents");
    return out;
  } catch (std::invalid_argument const& e) {
    throw corrupt_index_error(e.what());
  } catch (std::out_of_range const& e) {
    throw corrupt_index_error(e.what());
  }
}

stored_index build_byte_index(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw std::invalid_argument("empty input");
  stored_index out;
  out.symbols = alphabet::of(bytes);
  const auto text = out.symbols.encode(bytes);
  out.index = bt_index::build(*text, out.symbols.sigma());
  return out;
}

}  // namespace btindex
