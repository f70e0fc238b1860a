// SPDX-License-Identifier: Apache-2.0
#pragma once

// Reference parameter sets for 28 GHz and 73 GHz urban micro-cell street
// canyon and indoor office measurements: 16 single-frequency FI/CI rows and
// 12 multi-frequency ABG/CI/CIF rows.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plm/models.hpp"

namespace plm {

struct ReferenceEntry {
  Scenario scenario;
  Environment environment;
  std::vector<double> frequencies_ghz; // ascending
  double dist_min_m;
  double dist_max_m;
  Model params;
  double sigma_db;
  // CIF rows: the stored f0 is derived from equal per-band sample counts
  // rather than printed alongside the fit.
  bool f0_derived = false;

  ModelKind model() const { return kind_of(params); }
  bool multi_frequency() const { return frequencies_ghz.size() > 1; }
};

/// All reference rows, single-frequency rows first, in printed order.
std::span<const ReferenceEntry> reference_entries();

/// Exact match on scenario, environment, frequency set and model.
std::optional<ReferenceEntry> reference_lookup(const Scenario& scenario, Environment env,
                                               std::span<const double> frequencies_ghz, ModelKind model);

/// CSV export: scenario,environment,model,freq_ghz_list,dist_min_m,dist_max_m,
/// ple_or_alpha_or_n,beta_db,gamma_or_b,sigma_db. Frequency lists are ';'-joined.
std::string registry_csv();

} // namespace plm
