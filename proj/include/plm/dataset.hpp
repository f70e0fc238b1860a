// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "plm/models.hpp"

namespace plm {

/// One per-location omnidirectional path loss measurement.
struct PathLossSample {
  Scenario scenario;
  Environment environment;
  FrequencyGHz freq;
  DistanceM dist;
  double path_loss_db;
};

/// Ordered, validated sample collection with provenance.
class Dataset {
public:
  using Metadata = std::map<std::string, std::string>;

  Dataset() = default;
  explicit Dataset(std::vector<PathLossSample> samples, std::string source = {}, Metadata metadata = {});

  std::span<const PathLossSample> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  const std::string& source() const noexcept { return source_; }
  const Metadata& metadata() const noexcept { return metadata_; }

private:
  std::vector<PathLossSample> samples_;
  std::string source_;
  Metadata metadata_;
};

/// Column view of a sample set: frequency (GHz), distance (m), path loss (dB).
struct SampleColumns {
  Eigen::ArrayXd freq_ghz;
  Eigen::ArrayXd dist_m;
  Eigen::ArrayXd path_loss_db;

  explicit SampleColumns(std::span<const PathLossSample> samples);
  Eigen::Index size() const noexcept { return path_loss_db.size(); }
};

/// Distinct frequencies in ascending order.
std::vector<double> frequency_set(std::span<const PathLossSample> samples);

/// Distinct frequencies with their sample counts, ascending by frequency.
std::vector<std::pair<FrequencyGHz, std::int64_t>> frequency_counts(std::span<const PathLossSample> samples);

inline constexpr std::string_view csv_header = "scenario,environment,frequency_ghz,distance_m,path_loss_db";

/// Reads the interchange CSV. Throws SchemaError, ParseError or
/// ValidationError; row numbers are 1-based physical line numbers.
Dataset load_csv(std::istream& in, std::string source = {});

/// Writes the interchange CSV (LF newlines, shortest round-trip numbers).
void write_csv(const Dataset& ds, std::ostream& out);

using SamplePredicate = std::function<bool(const PathLossSample&)>;

Dataset filter(const Dataset& ds, const SamplePredicate& keep);

SamplePredicate by_environment(Environment env);
SamplePredicate by_scenario(Scenario scenario);
SamplePredicate by_frequency(double ghz);

/// Synthetic measurement campaign.
struct GenSpec {
  Model model;
  std::vector<std::pair<FrequencyGHz, std::int64_t>> freq_plan;
  double dist_min_m = 1.0;
  double dist_max_m = 10.0;
  double sigma_db = 0.0;
  std::uint64_t seed = 0;
  Scenario scenario = Scenario::other("synthetic");
  Environment environment = Environment::nlos;
};

/// Distances are log-uniform over [dist_min, dist_max]; each path loss is the
/// model mean plus independent N(0, sigma^2) dB shadowing. Sample k draws its
/// distance from counter 2k and its shadowing from counter 2k + 1.
Dataset generate_synthetic(const GenSpec& spec);

} // namespace plm
