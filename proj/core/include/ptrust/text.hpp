#pragma once

#include <string>

namespace ptrust::text {

// Shortest decimal form that parses back to the same double; used by the
// graph serializer so round-trips are exact.
std::string format_exact(double value);

// Human output: 6 significant digits, or fixed decimals when round >= 0.
std::string format_value(double value, int round = -1);

}  // namespace ptrust::text
