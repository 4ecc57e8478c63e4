#pragma once

#include <cstdint>

namespace btindex {

/// Dense text symbol. Valid text symbols are 1..sigma; sigma+1 is the
/// terminator and sigma+2 the padding symbol.
using symbol_t = std::uint16_t;

/// 1-based position or count.
using pos_t = std::uint64_t;

}  // namespace btindex
