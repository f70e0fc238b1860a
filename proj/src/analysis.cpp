// SPDX-License-Identifier: Apache-2.0
#include "plm/analysis.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "plm/detail/overloaded.hpp"
#include "plm/format.hpp"

namespace plm {

DatasetSummary summarize(const Dataset& ds) {
  DatasetSummary s;
  s.sample_count = ds.size();
  s.frequencies_ghz = frequency_set(ds.samples());
  if (ds.empty())
    return s;
  const auto& first = ds.samples().front();
  s.scenario = first.scenario;
  s.environment = first.environment;
  s.dist_min_m = first.dist.meters();
  s.dist_max_m = first.dist.meters();
  for (const auto& sample : ds.samples()) {
    if (s.scenario && !(sample.scenario == *s.scenario))
      s.scenario.reset();
    if (s.environment && sample.environment != *s.environment)
      s.environment.reset();
    s.dist_min_m = std::min(s.dist_min_m, sample.dist.meters());
    s.dist_max_m = std::max(s.dist_max_m, sample.dist.meters());
  }
  return s;
}

const ReportEntry* ComparisonReport::find(ModelKind kind) const {
  for (const auto& e : entries)
    if (e.model == kind)
      return &e;
  return nullptr;
}

std::vector<std::pair<std::string, double>> named_parameters(const Model& m) {
  return std::visit(detail::overloaded{
                        [](const FiParamsd& p) -> std::vector<std::pair<std::string, double>> {
                          return {{"alpha", p.alpha}, {"beta", p.beta}};
                        },
                        [](const CiParamsd& p) -> std::vector<std::pair<std::string, double>> {
                          return {{"n", p.n}};
                        },
                        [](const AbgParamsd& p) -> std::vector<std::pair<std::string, double>> {
                          return {{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}};
                        },
                        [](const CifParamsd& p) -> std::vector<std::pair<std::string, double>> {
                          return {{"n", p.n}, {"b", p.b}};
                        },
                    },
                    m);
}

namespace {

std::size_t distinct_distances(const Dataset& ds) {
  std::vector<double> d;
  for (const auto& s : ds.samples())
    d.push_back(s.dist.meters());
  std::sort(d.begin(), d.end());
  return static_cast<std::size_t>(std::unique(d.begin(), d.end()) - d.begin());
}

// Empty string when the data can support the model.
std::string precondition_failure(ModelKind kind, const DatasetSummary& summary, std::size_t distances) {
  const auto nfreq = summary.frequencies_ghz.size();
  switch (kind) {
  case ModelKind::fi:
    if (nfreq != 1)
      return "FI is a single-frequency model; data has " + std::to_string(nfreq) + " frequencies";
    if (distances < 2)
      return "FI needs at least two distinct distances";
    break;
  case ModelKind::abg:
    if (nfreq < 2)
      return "ABG needs at least two distinct frequencies";
    if (distances < 2)
      return "ABG needs at least two distinct distances";
    break;
  case ModelKind::ci:
  case ModelKind::cif:
    break;
  }
  return {};
}

std::optional<RegistryDelta> registry_delta(const DatasetSummary& summary, const FitResult& fit) {
  if (!summary.scenario || !summary.environment)
    return std::nullopt;
  auto ref = reference_lookup(*summary.scenario, *summary.environment, summary.frequencies_ghz, fit.model());
  if (!ref)
    return std::nullopt;
  RegistryDelta delta{*ref, {}, fit.sigma_db};
  const auto fitted = named_parameters(fit.params);
  const auto reference = named_parameters(ref->params);
  for (std::size_t i = 0; i < fitted.size(); ++i)
    delta.params.push_back(ParamDelta{fitted[i].first, fitted[i].second, reference[i].second});
  return delta;
}

} // namespace

ComparisonReport compare_models(const Dataset& ds, std::span<const ModelKind> models, F0Mode f0_mode) {
  ComparisonReport report;
  report.summary = summarize(ds);
  const std::size_t distances = distinct_distances(ds);

  std::vector<ModelKind> requested;
  for (ModelKind k : models)
    if (std::find(requested.begin(), requested.end(), k) == requested.end())
      requested.push_back(k);

  for (ModelKind kind : requested) {
    ReportEntry entry{kind, std::nullopt, {}, std::nullopt};
    if (ds.empty()) {
      entry.skipped_reason = "dataset is empty";
    } else if (auto why = precondition_failure(kind, report.summary, distances); !why.empty()) {
      entry.skipped_reason = std::move(why);
    } else {
      try {
        entry.fit = fit(kind, ds.samples(), f0_mode);
        entry.delta = registry_delta(report.summary, *entry.fit);
      } catch (const Error& e) {
        entry.skipped_reason = e.what();
      }
    }
    report.entries.push_back(std::move(entry));
  }

  for (const auto& e : report.entries)
    if (e.fit)
      report.sigma_ranking.push_back(e.model);
  if (report.sigma_ranking.empty())
    throw EmptyReportError("no requested model could be fitted to the data");
  std::stable_sort(report.sigma_ranking.begin(), report.sigma_ranking.end(), [&](ModelKind a, ModelKind b) {
    return report.find(a)->fit->sigma_db < report.find(b)->fit->sigma_db;
  });
  return report;
}

DistanceM max_range(const RangeQuery& q) {
  if (!(q.max_path_loss_db > 0.0) || !std::isfinite(q.max_path_loss_db))
    throw DomainError("maximum path loss must be a positive dB value");
  const double slope = distance_slope(q.model, q.freq);
  if (!(slope > 0.0))
    throw NoSolutionError("model path loss does not increase with distance (slope " + format_significant(slope) +
                          "); no range solves the budget");
  const double anchor = anchor_value(q.model, q.freq);
  if (q.max_path_loss_db < anchor)
    throw BelowAnchorError("maximum path loss " + format_significant(q.max_path_loss_db) +
                           " dB is below the 1 m value " + format_significant(anchor) + " dB");
  return DistanceM(std::pow(10.0, (q.max_path_loss_db - anchor) / (10.0 * slope)));
}

namespace {

std::string fixed(double x, int precision = 2) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::fixed, precision);
  return std::string(buf.data(), end);
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
    case '&':
      out += "&amp;";
      break;
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    case '"':
      out += "&quot;";
      break;
    default:
      out += c;
    }
  }
  return out;
}

constexpr std::array<const char*, 6> palette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

const char* dash_for(ModelKind kind) {
  switch (kind) {
  case ModelKind::fi:
    return "2,3";
  case ModelKind::ci:
    return "none";
  case ModelKind::abg:
    return "8,4";
  case ModelKind::cif:
    return "12,3,2,3";
  }
  return "none";
}

struct Range {
  double lo;
  double hi;
};

Range padded(double lo, double hi, double fraction) {
  const double span = hi - lo;
  const double pad = fraction * (span > 0.0 ? span : 1.0);
  return {lo - pad, hi + pad};
}

double nice_step(double span, int target_ticks) {
  const double raw = span / target_ticks;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (m * mag >= raw)
      return m * mag;
  return 10.0 * mag;
}

} // namespace

std::string emit_plot(const Dataset& ds, std::span<const FitResult> fits, const PlotStyle& style) {
  if (ds.empty())
    throw DomainError("cannot plot an empty dataset");

  const DatasetSummary summary = summarize(ds);
  double pl_min = ds.samples().front().path_loss_db;
  double pl_max = pl_min;
  for (const auto& s : ds.samples()) {
    pl_min = std::min(pl_min, s.path_loss_db);
    pl_max = std::max(pl_max, s.path_loss_db);
  }
  const Range xr = padded(std::log10(summary.dist_min_m), std::log10(summary.dist_max_m), style.padding_fraction);
  const Range yr = padded(pl_min, pl_max, style.padding_fraction);

  const double left = 70.0, right = 20.0, top = 40.0, bottom = 55.0;
  const double pw = style.width - left - right;
  const double ph = style.height - top - bottom;
  auto px = [&](double log_d) { return left + (log_d - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double pl) { return top + (yr.hi - pl) / (yr.hi - yr.lo) * ph; };

  auto color_of = [&](double f) {
    const auto it = std::find(summary.frequencies_ghz.begin(), summary.frequencies_ghz.end(), f);
    return palette[static_cast<std::size_t>(it - summary.frequencies_ghz.begin()) % palette.size()];
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\"" << style.height
      << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n";
  svg << "<defs><clipPath id=\"plot-area\"><rect x=\"" << fixed(left) << "\" y=\"" << fixed(top) << "\" width=\""
      << fixed(pw) << "\" height=\"" << fixed(ph) << "\"/></clipPath></defs>\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << fixed(style.width / 2.0) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
      << escape_xml(style.title) << "</text>\n";

  svg << "<g class=\"axes\" data-x-min=\"" << format_shortest(xr.lo) << "\" data-x-max=\"" << format_shortest(xr.hi)
      << "\" data-y-min=\"" << format_shortest(yr.lo) << "\" data-y-max=\"" << format_shortest(yr.hi)
      << "\" font-size=\"11\">\n";
  svg << "<rect x=\"" << fixed(left) << "\" y=\"" << fixed(top) << "\" width=\"" << fixed(pw) << "\" height=\""
      << fixed(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

  // Distance ticks at 1-2-5 multiples of each decade.
  for (int decade = static_cast<int>(std::floor(xr.lo)); decade <= static_cast<int>(std::ceil(xr.hi)); ++decade) {
    for (double m : {1.0, 2.0, 5.0}) {
      const double x = decade + std::log10(m);
      if (x < xr.lo || x > xr.hi)
        continue;
      svg << "<line x1=\"" << fixed(px(x)) << "\" y1=\"" << fixed(top + ph) << "\" x2=\"" << fixed(px(x))
          << "\" y2=\"" << fixed(top + ph + 5) << "\" stroke=\"black\"/>";
      svg << "<text x=\"" << fixed(px(x)) << "\" y=\"" << fixed(top + ph + 18) << "\" text-anchor=\"middle\">"
          << format_significant(std::pow(10.0, x), 3) << "</text>\n";
    }
  }
  const double ystep = nice_step(yr.hi - yr.lo, 6);
  for (double y = std::ceil(yr.lo / ystep) * ystep; y <= yr.hi; y += ystep) {
    svg << "<line x1=\"" << fixed(left - 5) << "\" y1=\"" << fixed(py(y)) << "\" x2=\"" << fixed(left) << "\" y2=\""
        << fixed(py(y)) << "\" stroke=\"black\"/>";
    svg << "<text x=\"" << fixed(left - 8) << "\" y=\"" << fixed(py(y) + 4) << "\" text-anchor=\"end\">"
        << format_significant(y, 4) << "</text>\n";
  }
  svg << "<text x=\"" << fixed(left + pw / 2) << "\" y=\"" << fixed(style.height - 12.0)
      << "\" text-anchor=\"middle\">T-R separation (m)</text>\n";
  svg << "<text x=\"16\" y=\"" << fixed(top + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << fixed(top + ph / 2) << ")\">Path loss (dB)</text>\n";
  svg << "</g>\n";

  svg << "<g class=\"samples\">\n";
  for (const auto& s : ds.samples()) {
    svg << "<circle class=\"sample\" cx=\"" << fixed(px(std::log10(s.dist.meters()))) << "\" cy=\""
        << fixed(py(s.path_loss_db)) << "\" r=\"3\" fill=\"none\" stroke=\"" << color_of(s.freq.ghz()) << "\"/>\n";
  }
  svg << "</g>\n";

  svg << "<g class=\"fits\" clip-path=\"url(#plot-area)\">\n";
  const DistanceM d_lo(summary.dist_min_m), d_hi(summary.dist_max_m);
  for (const auto& fit : fits) {
    for (double fghz : summary.frequencies_ghz) {
      const FrequencyGHz f(fghz);
      const double pl_lo = evaluate(fit.params, f, d_lo);
      const double pl_hi = evaluate(fit.params, f, d_hi);
      svg << "<line class=\"fit\" data-model=\"" << model_name(fit.model()) << "\" data-freq-ghz=\""
          << format_shortest(fghz) << "\" data-pl-start-db=\"" << format_shortest(pl_lo) << "\" data-pl-end-db=\""
          << format_shortest(pl_hi) << "\" x1=\"" << fixed(px(std::log10(d_lo.meters()))) << "\" y1=\""
          << fixed(py(pl_lo)) << "\" x2=\"" << fixed(px(std::log10(d_hi.meters()))) << "\" y2=\"" << fixed(py(pl_hi))
          << "\" stroke=\"" << color_of(fghz) << "\" stroke-width=\"1.5\" stroke-dasharray=\""
          << dash_for(fit.model()) << "\"/>\n";
    }
  }
  svg << "</g>\n";

  svg << "<g class=\"legend\" font-size=\"11\">\n";
  double ly = top + 16.0;
  for (double fghz : summary.frequencies_ghz) {
    svg << "<circle cx=\"" << fixed(left + 12) << "\" cy=\"" << fixed(ly - 4) << "\" r=\"3\" fill=\"none\" stroke=\""
        << color_of(fghz) << "\"/><text x=\"" << fixed(left + 22) << "\" y=\"" << fixed(ly) << "\">"
        << format_shortest(fghz) << " GHz</text>\n";
    ly += 15.0;
  }
  for (const auto& fit : fits) {
    std::string label = std::string(model_name(fit.model())) + ":";
    for (const auto& [name, value] : named_parameters(fit.params))
      label += " " + name + " = " + format_significant(value, 3);
    if (fit.f0_used)
      label += " f0 = " + format_shortest(*fit.f0_used) + " GHz";
    label += ", sigma = " + format_significant(fit.sigma_db, 3) + " dB";
    svg << "<line x1=\"" << fixed(left + 6) << "\" y1=\"" << fixed(ly - 4) << "\" x2=\"" << fixed(left + 18)
        << "\" y2=\"" << fixed(ly - 4) << "\" stroke=\"black\" stroke-dasharray=\"" << dash_for(fit.model())
        << "\"/><text x=\"" << fixed(left + 22) << "\" y=\"" << fixed(ly) << "\">" << escape_xml(label)
        << "</text>\n";
    ly += 15.0;
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

} // namespace plm
