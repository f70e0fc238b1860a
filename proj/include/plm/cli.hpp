// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace plm::cli {

enum ExitCode : int { ok = 0, validation_error = 1, usage_error = 2 };

/// Runs one command line (without the program name). Primary output goes to
/// `out` or to the file named by -o; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The flags each verb accepts, as listed in its help text.
const std::map<std::string, std::set<std::string>>& documented_flags();

/// Help text generated for `verb`, or the top-level help for an empty verb.
std::string help_text(const std::string& verb);

} // namespace plm::cli
