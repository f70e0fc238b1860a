// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

namespace plm {

/// Shortest decimal text that round-trips to the same double. Locale independent.
std::string format_shortest(double x);

/// Decimal text with `digits` significant digits (printf %g style, no locale).
std::string format_significant(double x, int digits = 6);

/// x rounded to `digits` significant digits.
double round_significant(double x, int digits = 6);

/// Strict locale-independent parse; the whole string must be consumed.
bool parse_double(std::string_view text, double& out);

} // namespace plm
