#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "btindex/types.hpp"

namespace btindex::cli {

enum exit_code : int {
  ok = 0,
  usage = 1,
  io_error = 2,
  corrupt = 3,
  verification_failed = 4,
};

struct verify_options {
  std::uint64_t patterns = 1000;
  std::uint64_t max_m = 32;
  std::uint64_t seed = 42;
};

int cmd_build(std::filesystem::path const& input, std::filesystem::path const& output, std::ostream& out,
              std::ostream& err);
int cmd_search(std::filesystem::path const& index, std::string const& pattern, bool count_only, std::ostream& out,
               std::ostream& err);
int cmd_extract(std::filesystem::path const& index, pos_t from, pos_t len, std::ostream& out, std::ostream& err);
int cmd_stats(std::filesystem::path const& index, std::ostream& out, std::ostream& err);
int cmd_verify(std::filesystem::path const& index, std::filesystem::path const& original, verify_options const& opt,
               std::ostream& out, std::ostream& err);

/// Decodes a pattern literal where \xHH denotes a byte and \\ a backslash.
std::optional<std::vector<std::uint8_t>> parse_pattern(std::string const& literal);

/// Full command line: `btindex <build|search|extract|stats|verify> ...`.
int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace btindex::cli
