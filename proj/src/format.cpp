// SPDX-License-Identifier: Apache-2.0
#include "plm/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

namespace plm {

std::string format_shortest(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

std::string format_significant(double x, int digits) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, digits);
  return std::string(buf.data(), end);
}

double round_significant(double x, int digits) {
  if (!std::isfinite(x))
    return x;
  double out = x;
  parse_double(format_significant(x, digits), out);
  return out;
}

bool parse_double(std::string_view text, double& out) {
  if (text.empty())
    return false;
  // from_chars rejects a leading '+', which some writers emit.
  if (text.front() == '+')
    text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value))
    return false;
  out = value;
  return true;
}

} // namespace plm
