// SPDX-License-Identifier: Apache-2.0
#include "plm/dataset.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <ostream>

#include "plm/format.hpp"
#include "plm/rng.hpp"

namespace plm {

Dataset::Dataset(std::vector<PathLossSample> samples, std::string source, Metadata metadata)
    : samples_(std::move(samples)), source_(std::move(source)), metadata_(std::move(metadata)) {
  for (const auto& s : samples_)
    if (!(s.path_loss_db > 0.0) || !std::isfinite(s.path_loss_db))
      throw DomainError("path loss must be a positive finite dB value");
}

SampleColumns::SampleColumns(std::span<const PathLossSample> samples)
    : freq_ghz(static_cast<Eigen::Index>(samples.size())),
      dist_m(static_cast<Eigen::Index>(samples.size())),
      path_loss_db(static_cast<Eigen::Index>(samples.size())) {
  for (Eigen::Index i = 0; i < size(); ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    freq_ghz(i) = s.freq.ghz();
    dist_m(i) = s.dist.meters();
    path_loss_db(i) = s.path_loss_db;
  }
}

std::vector<double> frequency_set(std::span<const PathLossSample> samples) {
  std::vector<double> out;
  for (const auto& s : samples)
    out.push_back(s.freq.ghz());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<FrequencyGHz, std::int64_t>> frequency_counts(std::span<const PathLossSample> samples) {
  std::map<double, std::int64_t> counts;
  for (const auto& s : samples)
    ++counts[s.freq.ghz()];
  std::vector<std::pair<FrequencyGHz, std::int64_t>> out;
  for (const auto& [f, n] : counts)
    out.emplace_back(FrequencyGHz(f), n);
  return out;
}

namespace {

constexpr std::array<std::string_view, 5> columns = {"scenario", "environment", "frequency_ghz", "distance_m",
                                                     "path_loss_db"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return cells;
}

void check_header(const std::vector<std::string_view>& cells) {
  for (auto name : columns)
    if (std::find(cells.begin(), cells.end(), name) == cells.end())
      throw SchemaError(std::string(name), "CSV header is missing column '" + std::string(name) + "'");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i >= columns.size())
      throw SchemaError(std::string(cells[i]), "unexpected CSV column '" + std::string(cells[i]) + "'");
    if (cells[i] != columns[i])
      throw SchemaError(std::string(columns[i]), "CSV column " + std::to_string(i + 1) + " must be '" +
                                                     std::string(columns[i]) + "'");
  }
}

double numeric_cell(std::string_view cell, std::size_t row, std::string_view column) {
  double value = 0.0;
  if (!parse_double(cell, value))
    throw ParseError(row, std::string(column), "'" + std::string(cell) + "' is not a decimal number");
  return value;
}

} // namespace

Dataset load_csv(std::istream& in, std::string source) {
  std::vector<PathLossSample> samples;
  std::string line;
  std::size_t row = 0;
  bool have_header = false;
  Dataset::Metadata metadata;
  while (std::getline(in, line)) {
    ++row;
    const auto content = trim(line);
    if (content.empty())
      continue;
    if (content.front() == '#') {
      // "# key: value" comments before the header carry metadata.
      const auto body = trim(content.substr(1));
      const auto colon = body.find(": ");
      if (!have_header && colon != std::string_view::npos && colon > 0)
        metadata.emplace(std::string(trim(body.substr(0, colon))), std::string(trim(body.substr(colon + 2))));
      continue;
    }
    const auto cells = split(content);
    if (!have_header) {
      check_header(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != columns.size())
      throw ParseError(row, "*", "expected " + std::to_string(columns.size()) + " cells, found " +
                                     std::to_string(cells.size()));

    Scenario scenario = Scenario::indoor_office();
    Environment env = Environment::los;
    try {
      scenario = scenario_from_token(std::string(cells[0]));
    } catch (const DomainError& e) {
      throw ParseError(row, "scenario", e.what());
    }
    try {
      env = environment_from_token(std::string(cells[1]));
    } catch (const DomainError& e) {
      throw ParseError(row, "environment", e.what());
    }
    const double f = numeric_cell(cells[2], row, "frequency_ghz");
    const double d = numeric_cell(cells[3], row, "distance_m");
    const double pl = numeric_cell(cells[4], row, "path_loss_db");
    if (f < 1.0)
      throw ValidationError(row, "frequency_ghz = " + std::string(cells[2]) + " violates f >= 1 GHz");
    if (d < 1.0)
      throw ValidationError(row, "distance_m = " + std::string(cells[3]) + " violates d >= 1 m");
    if (pl <= 0.0)
      throw ValidationError(row, "path_loss_db = " + std::string(cells[4]) + " must be > 0 dB");
    samples.push_back(PathLossSample{std::move(scenario), env, FrequencyGHz(f), DistanceM(d), pl});
  }
  if (!have_header)
    throw SchemaError("scenario", "CSV input has no header line");
  return Dataset(std::move(samples), std::move(source), std::move(metadata));
}

void write_csv(const Dataset& ds, std::ostream& out) {
  for (const auto& [key, value] : ds.metadata())
    out << "# " << key << ": " << value << '\n';
  out << csv_header << '\n';
  for (const auto& s : ds.samples()) {
    out << to_token(s.scenario) << ',' << to_token(s.environment) << ',' << format_shortest(s.freq.ghz()) << ','
        << format_shortest(s.dist.meters()) << ',' << format_shortest(s.path_loss_db) << '\n';
  }
}

Dataset filter(const Dataset& ds, const SamplePredicate& keep) {
  std::vector<PathLossSample> kept;
  std::copy_if(ds.samples().begin(), ds.samples().end(), std::back_inserter(kept), keep);
  return Dataset(std::move(kept), ds.source(), ds.metadata());
}

SamplePredicate by_environment(Environment env) {
  return [env](const PathLossSample& s) { return s.environment == env; };
}

SamplePredicate by_scenario(Scenario scenario) {
  return [scenario = std::move(scenario)](const PathLossSample& s) { return s.scenario == scenario; };
}

SamplePredicate by_frequency(double ghz) {
  return [ghz](const PathLossSample& s) { return s.freq.ghz() == ghz; };
}

Dataset generate_synthetic(const GenSpec& spec) {
  if (!(spec.dist_min_m >= 1.0) || !(spec.dist_max_m > spec.dist_min_m) || !std::isfinite(spec.dist_max_m))
    throw DomainError("synthetic distance range needs 1 <= dmin < dmax");
  if (!(spec.sigma_db >= 0.0) || !std::isfinite(spec.sigma_db))
    throw DomainError("shadowing sigma must be >= 0 dB");
  if (spec.freq_plan.empty())
    throw DomainError("frequency plan is empty");
  for (const auto& [f, count] : spec.freq_plan)
    if (count < 1)
      throw DomainError("every planned frequency needs a count >= 1");

  const CounterRng rng(spec.seed);
  const double log_min = std::log10(spec.dist_min_m);
  const double log_span = std::log10(spec.dist_max_m) - log_min;

  std::vector<PathLossSample> samples;
  std::uint64_t k = 0;
  for (const auto& [f, count] : spec.freq_plan) {
    for (std::int64_t i = 0; i < count; ++i, ++k) {
      const double u = rng.uniform(2 * k);
      const double d = std::clamp(std::pow(10.0, log_min + u * log_span), spec.dist_min_m, spec.dist_max_m);
      const DistanceM dist(d);
      const double mean = evaluate(spec.model, f, dist);
      const double pl = mean + spec.sigma_db * rng.normal(2 * k + 1);
      samples.push_back(PathLossSample{spec.scenario, spec.environment, f, dist, pl});
    }
  }

  Dataset::Metadata meta{
      {"generator", std::string(CounterRng::algorithm_id)},
      {"seed", std::to_string(spec.seed)},
      {"model", std::string(model_token(kind_of(spec.model)))},
      {"sigma_db", format_shortest(spec.sigma_db)},
  };
  return Dataset(std::move(samples), "synthetic", std::move(meta));
}

} // namespace plm
