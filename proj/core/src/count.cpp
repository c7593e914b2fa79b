#include "bigen/count.hpp"

#include <algorithm>
#include <stdexcept>

namespace bigen {

std::string to_string(WideCount value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

WideCount parse_wide_count(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty count");
  constexpr WideCount kMax = ~WideCount{0};
  WideCount value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a decimal count: '" + text + "'");
    const auto digit = static_cast<WideCount>(c - '0');
    if (value > (kMax - digit) / 10) throw std::invalid_argument("count overflows 128 bits: '" + text + "'");
    value = value * 10 + digit;
  }
  return value;
}

}  // namespace bigen
