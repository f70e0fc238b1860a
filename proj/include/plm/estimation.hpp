// SPDX-License-Identifier: Apache-2.0
#pragma once

// Closed-form least-squares fits that minimize the shadow fading standard
// deviation, sigma = sqrt(mean(residual^2)), plus an exhaustive grid search
// used to cross-check them.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "plm/dataset.hpp"
#include "plm/models.hpp"

namespace plm {

struct FitResult {
  Model params;
  double sigma_db = 0.0;
  Eigen::VectorXd residuals; // measured minus modeled, dB
  std::size_t sample_count = 0;
  std::vector<double> frequency_set; // ascending GHz
  std::optional<double> f0_used;     // CIF only
  std::string note;

  ModelKind model() const { return kind_of(params); }
};

/// How CIF obtains its reference frequency.
struct F0Mode {
  std::optional<FrequencyGHz> fixed; // nullopt: weighted mean of the data, rounded

  static F0Mode automatic() { return {}; }
  static F0Mode explicit_value(FrequencyGHz f0) { return F0Mode{f0}; }
};

FitResult fit_fi(std::span<const PathLossSample> samples);
FitResult fit_ci(std::span<const PathLossSample> samples);
FitResult fit_abg(std::span<const PathLossSample> samples);
FitResult fit_cif(std::span<const PathLossSample> samples, F0Mode f0_mode = F0Mode::automatic());

/// Dispatches on `kind`; f0_mode is used by CIF only.
FitResult fit(ModelKind kind, std::span<const PathLossSample> samples, F0Mode f0_mode = F0Mode::automatic());

struct ResidualStats {
  double sigma_db;
  Eigen::VectorXd residuals;
};

using ModelEvaluator = std::function<double(FrequencyGHz, DistanceM)>;

ResidualStats residual_stats(std::span<const PathLossSample> samples, const ModelEvaluator& model);
ResidualStats residual_stats(std::span<const PathLossSample> samples, const Model& model);

/// Inclusive grid axis lo, lo + step, ..., up to hi.
struct GridAxis {
  double lo;
  double hi;
  double step;
};

/// One axis per model parameter, in declaration order:
/// FI (alpha, beta), CI (n), ABG (alpha, beta, gamma), CIF (n, b).
struct GridSpec {
  std::vector<GridAxis> axes;
};

struct GridResult {
  Model params;
  double sigma_db;
};

/// Brute-force minimizer of sigma over a parameter grid. The first minimum in
/// lexicographic order (first axis outermost) wins ties.
GridResult grid_oracle_fit(std::span<const PathLossSample> samples, ModelKind kind, const GridSpec& grid,
                           F0Mode f0_mode = F0Mode::automatic());

} // namespace plm
