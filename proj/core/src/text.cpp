#include "ptrust/text.hpp"

#include <charconv>
#include <cstdio>

namespace ptrust::text {

std::string format_exact(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

std::string format_value(double value, int round) {
  char buffer[64];
  int written = round >= 0 ? std::snprintf(buffer, sizeof(buffer), "%.*f", round, value)
                           : std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return std::string(buffer, buffer + written);
}

}  // namespace ptrust::text
