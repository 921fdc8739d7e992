#pragma once

#include <charconv>
#include <string>

namespace reeb {

// Shortest decimal form that round-trips the double exactly.
inline std::string format_value(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

} // namespace reeb
