// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plm/dataset.hpp"
#include "plm/estimation.hpp"
#include "plm/registry.hpp"

namespace plm {

struct DatasetSummary {
  std::optional<Scenario> scenario;       // nullopt when samples mix scenarios
  std::optional<Environment> environment; // nullopt when samples mix environments
  std::vector<double> frequencies_ghz;
  double dist_min_m = 0.0;
  double dist_max_m = 0.0;
  std::size_t sample_count = 0;
};

DatasetSummary summarize(const Dataset& ds);

struct ParamDelta {
  std::string name;
  double fitted;
  double reference;
};

/// Fitted values against the matching registry row.
struct RegistryDelta {
  ReferenceEntry reference;
  std::vector<ParamDelta> params;
  double sigma_fitted;
};

struct ReportEntry {
  ModelKind model;
  std::optional<FitResult> fit; // nullopt when skipped
  std::string skipped_reason;
  std::optional<RegistryDelta> delta;
};

struct ComparisonReport {
  DatasetSummary summary;
  std::vector<ReportEntry> entries; // one per requested model, request order
  std::vector<ModelKind> sigma_ranking; // fitted models, ascending sigma

  const ReportEntry* find(ModelKind kind) const;
};

/// Fits every requested model whose data preconditions hold and ranks them by
/// sigma. FI is single-frequency only; ABG needs two frequencies and two
/// distances. Throws EmptyReportError when nothing could be fitted.
ComparisonReport compare_models(const Dataset& ds, std::span<const ModelKind> models,
                                F0Mode f0_mode = F0Mode::automatic());

/// Named parameters of a model in table order, e.g. {"alpha", 2.5}, {"beta", 80.6}.
std::vector<std::pair<std::string, double>> named_parameters(const Model& m);

struct RangeQuery {
  Model model;
  FrequencyGHz freq;
  double max_path_loss_db;
};

/// Largest distance at which the mean path loss stays within the budget:
/// d = 10^((PLmax - PL(f, 1 m)) / (10 slope)).
DistanceM max_range(const RangeQuery& q);

struct PlotStyle {
  int width = 720;
  int height = 480;
  std::string title = "Path loss vs. T-R separation";
  double padding_fraction = 0.05;
};

/// SVG scatter of the samples on a log-distance axis with one fit line per
/// (fit, frequency) pair, drawn over the observed distance range.
std::string emit_plot(const Dataset& ds, std::span<const FitResult> fits, const PlotStyle& style = {});

} // namespace plm
