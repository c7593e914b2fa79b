#pragma once

#include <string>

namespace bigen {

/// Exact motif counts. Caterpillar totals of large graphs exceed 2^64 only
/// by a small margin, so totals are accumulated in 128 bits.
__extension__ typedef unsigned __int128 WideCount;

std::string to_string(WideCount value);

/// Parses a non-negative decimal integer; throws std::invalid_argument.
WideCount parse_wide_count(const std::string& text);

inline double to_double(WideCount value) noexcept { return static_cast<double>(value); }

}  // namespace bigen
