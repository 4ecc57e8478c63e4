#include "btindex/cli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "btindex/index_file.hpp"
#include "btindex/searcher.hpp"
#include "reference_oracle.hpp"

namespace btindex::cli {

namespace {

struct io_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_failure("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw io_failure("cannot read " + path.string());
  return bytes;
}

void write_file(std::filesystem::path const& path, std::vector<std::uint8_t> const& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_failure("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<char const*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw io_failure("cannot write " + path.string());
}

stored_index load(std::filesystem::path const& path) { return deserialize_index(read_file(path)); }

// Runs a command body and maps exceptions onto exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (io_failure const& e) {
    err << "error: " << e.what() << '\n';
    return io_error;
  } catch (corrupt_index_error const& e) {
    err << "error: corrupt index: " << e.what() << '\n';
    return corrupt;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
}

std::string printable(std::span<const std::uint8_t> bytes) {
  std::ostringstream s;
  for (auto b : bytes) {
    if (b >= 0x20 && b < 0x7F && b != '\\') s << static_cast<char>(b);
    else if (b == '\\') s << "\\\\";
    else s << "\\x" << std::hex << std::setw(2) << std::setfill('0') << int(b) << std::dec;
  }
  return s.str();
}

std::uint64_t bits_for(std::uint64_t v) { return std::max<std::uint64_t>(1, std::bit_width(v)); }

}  // namespace

std::optional<std::vector<std::uint8_t>> parse_pattern(std::string const& literal) {
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < literal.size(); ++i) {
    if (literal[i] != '\\') {
      out.push_back(static_cast<std::uint8_t>(literal[i]));
      continue;
    }
    if (i + 1 < literal.size() && literal[i + 1] == '\\') {
      out.push_back('\\');
      ++i;
      continue;
    }
    if (i + 3 < literal.size() + 0 && literal[i + 1] == 'x' && std::isxdigit(static_cast<unsigned char>(literal[i + 2])) &&
        std::isxdigit(static_cast<unsigned char>(literal[i + 3]))) {
      out.push_back(static_cast<std::uint8_t>(std::stoi(literal.substr(i + 2, 2), nullptr, 16)));
      i += 3;
      continue;
    }
    return std::nullopt;
  }
  return out;
}

int cmd_build(std::filesystem::path const& input, std::filesystem::path const& output, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto bytes = read_file(input);
    if (bytes.empty()) {
      err << "error: empty input\n";
      return static_cast<int>(usage);
    }
    const auto stored = build_byte_index(bytes);
    const auto file = serialize_index(stored.symbols, stored.index);
    write_file(output, file);
    auto const& shape = stored.index.shape();
    out << "n_original: " << shape.n_original << '\n'
        << "n: " << shape.n << '\n'
        << "z: " << shape.z << '\n'
        << "z_top: " << shape.z_top << '\n'
        << "b0: " << shape.b0 << '\n'
        << "levels: " << stored.index.tree.level_count() << '\n'
        << "w: " << stored.index.tree.leaf_count() << '\n'
        << "num_points: " << stored.index.grid.size() << '\n'
        << "bytes_written: " << file.size() << '\n';
    return static_cast<int>(ok);
  });
}

int cmd_search(std::filesystem::path const& index, std::string const& pattern, bool count_only, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const auto bytes = parse_pattern(pattern);
    if (!bytes || bytes->empty()) {
      err << "error: invalid pattern\n";
      return static_cast<int>(usage);
    }
    const auto stored = load(index);
    std::vector<pos_t> found;
    // A byte outside the indexed alphabet cannot occur.
    if (auto symbols = stored.symbols.encode(*bytes)) found = search(stored.index, *symbols);
    if (count_only) {
      out << found.size() << '\n';
    } else {
      for (pos_t p : found) out << p << '\n';
    }
    return static_cast<int>(ok);
  });
}

int cmd_extract(std::filesystem::path const& index, pos_t from, pos_t len, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto stored = load(index);
    const pos_t n = stored.index.shape().n_original;
    if (from < 1 || from > n + 1 || len > n + 1 - from) {
      err << "error: range [" << from << ", +" << len << ") outside text of length " << n << '\n';
      return static_cast<int>(usage);
    }
    out << stored.symbols.decode(stored.index.tree.extract(from, len));
    return static_cast<int>(ok);
  });
}

int cmd_stats(std::filesystem::path const& index, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto bytes = read_file(index);
    const auto stored = deserialize_index(bytes);
    auto const& tree = stored.index.tree;
    auto const& shape = tree.shape();
    const pos_t w = tree.leaf_count();
    const pos_t log_n = bits_for(shape.n);
    out << "sigma: " << shape.sigma << '\n'
        << "n_original: " << shape.n_original << '\n'
        << "n: " << shape.n << '\n'
        << "z: " << shape.z << '\n'
        << "z_top: " << shape.z_top << '\n'
        << "b0: " << shape.b0 << '\n'
        << "levels: " << tree.level_count() << '\n'
        << "w: " << w << '\n'
        << "internal_blocks: " << tree.internal_count() << '\n'
        << "unmarked_blocks: " << tree.unmarked_total() << '\n'
        << "num_points: " << stored.index.grid.size() << '\n'
        << "estimated_bits_3wlogn: " << 3 * w * log_n << '\n'
        << "index_bytes: " << bytes.size() << '\n'
        << "bits_per_symbol: " << std::fixed << std::setprecision(3)
        << 8.0 * double(bytes.size()) / double(shape.n_original) << '\n';
    out << "level  b_l  blocks  marked  unmarked\n";
    for (std::size_t l = 0; l < tree.level_count(); ++l) {
      auto const& lv = tree.level(l);
      out << l << ' ' << lv.block_length << ' ' << lv.block_count() << ' ' << lv.marked.count(true) << ' '
          << lv.unmarked_count() << '\n';
    }
    return static_cast<int>(ok);
  });
}

int cmd_verify(std::filesystem::path const& index, std::filesystem::path const& original, verify_options const& opt,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto stored = load(index);
    const oracle::oracle_text<std::uint8_t> text(read_file(original));
    auto const& idx = stored.index;
    const pos_t n = text.text().size();
    if (n != idx.shape().n_original) {
      out << "mismatch: index covers " << idx.shape().n_original << " symbols, original has " << n << '\n';
      return static_cast<int>(verification_failed);
    }
    if (opt.max_m < 1) throw std::invalid_argument("--max-m must be at least 1");

    std::mt19937_64 rng(opt.seed);
    auto uniform = [&](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };
    const auto& present = stored.symbols.bytes();

    std::uint64_t occurring = 0, random = 0, occurrences = 0, digest = 1469598103934665603ULL;
    for (std::uint64_t k = 0; k < opt.patterns; ++k) {
      const pos_t m = uniform(1, std::min<pos_t>(opt.max_m, n));
      std::vector<std::uint8_t> pattern;
      if (k % 2 == 0) {
        pattern = text.slice(uniform(1, n - m + 1), m);
        ++occurring;
      } else {
        for (pos_t j = 0; j < m; ++j) pattern.push_back(present[uniform(0, present.size() - 1)]);
        ++random;
      }
      for (auto b : pattern) digest = (digest ^ b) * 1099511628211ULL;

      const auto expect = text.search(pattern);
      const auto symbols = stored.symbols.encode(pattern);
      const auto got = symbols ? search(idx, *symbols) : std::vector<pos_t>{};
      if (got != expect) {
        out << "mismatch: pattern \"" << printable(pattern) << "\" expected " << expect.size()
            << " occurrences, index reported " << got.size() << '\n';
        return static_cast<int>(verification_failed);
      }
      occurrences += got.size();

      const pos_t len = uniform(0, std::min<pos_t>(4 * opt.max_m, n));
      const pos_t from = uniform(1, n - len + 1);
      const auto slice = text.slice(from, len);
      if (stored.symbols.decode(idx.tree.extract(from, len)) != std::string(slice.begin(), slice.end())) {
        out << "mismatch: extract(" << from << ", " << len << ") differs from the original\n";
        return static_cast<int>(verification_failed);
      }
    }
    out << "patterns: " << opt.patterns << " (occurring " << occurring << ", random " << random << ")\n"
        << "occurrences: " << occurrences << '\n'
        << "extract_ranges: " << opt.patterns << '\n'
        << "pattern_digest: " << std::hex << digest << std::dec << '\n'
        << "result: OK\n";
    return static_cast<int>(ok);
  });
}

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block-tree compressed self-index"};
  app.require_subcommand(1);

  std::string in_path, out_path, idx_path, pattern, orig_path;
  bool count_only = false;
  pos_t from = 0, len = 0;
  verify_options vopt;

  auto* build = app.add_subcommand("build", "Index a file");
  build->add_option("input", in_path, "Input file")->required();
  build->add_option("-o,--output", out_path, "Index file to write")->required();

  auto* srch = app.add_subcommand("search", "Report all occurrences of a pattern");
  srch->add_option("index", idx_path, "Index file")->required();
  srch->add_option("pattern", pattern, "Pattern; \\xHH escapes a byte")->required();
  srch->add_flag("--count", count_only, "Print only the number of occurrences");

  auto* extr = app.add_subcommand("extract", "Write a substring of the indexed text");
  extr->add_option("index", idx_path, "Index file")->required();
  extr->add_option("from", from, "1-based start")->required();
  extr->add_option("len", len, "Number of bytes")->required();

  auto* stats = app.add_subcommand("stats", "Print index statistics");
  stats->add_option("index", idx_path, "Index file")->required();

  auto* verify = app.add_subcommand("verify", "Check search and extract against brute force");
  verify->add_option("index", idx_path, "Index file")->required();
  verify->add_option("original", orig_path, "Original text")->required();
  verify->add_option("--patterns", vopt.patterns, "Number of sampled patterns");
  verify->add_option("--max-m", vopt.max_m, "Maximum pattern length");
  verify->add_option("--seed", vopt.seed, "Sampling seed");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return ok;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return usage;
  }

  if (*build) return cmd_build(in_path, out_path, out, err);
  if (*srch) return cmd_search(idx_path, pattern, count_only, out, err);
  if (*extr) return cmd_extract(idx_path, from, len, out, err);
  if (*stats) return cmd_stats(idx_path, out, err);
  return cmd_verify(idx_path, orig_path, vopt, out, err);
}

}  // namespace btindex::cli
