// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

#include "plm/analysis.hpp"
#include "plm/estimation.hpp"
#include "plm/registry.hpp"

namespace plm {

// JSON numbers are rounded to 6 significant digits.

/// {model, params, sigma_db, n_samples, freq_ghz_set, f0_ghz, [residuals], [note]}
nlohmann::ordered_json to_json(const FitResult& fit, bool include_residuals = false);

nlohmann::ordered_json to_json(const ComparisonReport& report, bool include_residuals = false);

nlohmann::ordered_json to_json(const ReferenceEntry& entry);

/// Aligned text table with the columns Scenario, Env, Freq (GHz),
/// Dist Range (m), Model, PLE/α/n, β (dB), γ/b, σ (dB). `styled` adds ANSI bold
/// to the header row.
std::string to_table(const ComparisonReport& report, bool styled = false);
std::string to_table(const FitResult& fit, const DatasetSummary& summary, bool styled = false);
std::string registry_table(bool styled = false);

} // namespace plm
