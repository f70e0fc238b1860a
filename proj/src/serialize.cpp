// SPDX-License-Identifier: Apache-2.0
#include "plm/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "plm/detail/overloaded.hpp"
#include "plm/format.hpp"

namespace plm {

namespace {

double r6(double x) { return round_significant(x, 6); }

nlohmann::ordered_json frequency_list(const std::vector<double>& freqs) {
  auto out = nlohmann::ordered_json::array();
  for (double f : freqs)
    out.push_back(r6(f));
  return out;
}

nlohmann::ordered_json param_map(const Model& m) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [name, value] : named_parameters(m))
    out[name] = r6(value);
  if (const auto* cif = std::get_if<CifParamsd>(&m))
    out["f0"] = r6(cif->f0.ghz());
  return out;
}

nlohmann::ordered_json diff(double fitted, double reference) {
  return {{"fitted", r6(fitted)}, {"reference", r6(reference)}, {"delta", r6(fitted - reference)}};
}

} // namespace

nlohmann::ordered_json to_json(const FitResult& fit, bool include_residuals) {
  nlohmann::ordered_json j;
  j["model"] = std::string(model_name(fit.model()));
  j["params"] = param_map(fit.params);
  j["sigma_db"] = r6(fit.sigma_db);
  j["n_samples"] = fit.sample_count;
  j["freq_ghz_set"] = frequency_list(fit.frequency_set);
  j["f0_ghz"] = fit.f0_used ? nlohmann::ordered_json(r6(*fit.f0_used)) : nlohmann::ordered_json(nullptr);
  if (include_residuals) {
    auto r = nlohmann::ordered_json::array();
    for (double v : fit.residuals)
      r.push_back(r6(v));
    j["residuals"] = std::move(r);
  }
  if (!fit.note.empty())
    j["note"] = fit.note;
  return j;
}

nlohmann::ordered_json to_json(const ComparisonReport& report, bool include_residuals) {
  const auto& s = report.summary;
  nlohmann::ordered_json j;
  j["dataset"] = {
      {"scenario", s.scenario ? nlohmann::ordered_json(to_token(*s.scenario)) : nlohmann::ordered_json("mixed")},
      {"environment", s.environment ? nlohmann::ordered_json(to_token(*s.environment)) : nlohmann::ordered_json("mixed")},
      {"freq_ghz_set", frequency_list(s.frequencies_ghz)},
      {"dist_min_m", r6(s.dist_min_m)},
      {"dist_max_m", r6(s.dist_max_m)},
      {"n_samples", s.sample_count},
  };
  auto models = nlohmann::ordered_json::array();
  auto deltas = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json m;
    m["model"] = std::string(model_name(e.model));
    if (e.fit) {
      m["fit"] = to_json(*e.fit, include_residuals);
    } else {
      m["fit"] = nullptr;
      m["skipped_reason"] = e.skipped_reason;
    }
    models.push_back(std::move(m));
    if (e.delta) {
      nlohmann::ordered_json d;
      d["model"] = std::string(model_name(e.model));
      nlohmann::ordered_json params = nlohmann::ordered_json::object();
      for (const auto& p : e.delta->params)
        params[p.name] = diff(p.fitted, p.reference);
      d["params"] = std::move(params);
      d["sigma_db"] = diff(e.delta->sigma_fitted, e.delta->reference.sigma_db);
      deltas.push_back(std::move(d));
    }
  }
  j["models"] = std::move(models);
  auto ranking = nlohmann::ordered_json::array();
  for (ModelKind k : report.sigma_ranking)
    ranking.push_back(std::string(model_name(k)));
  j["sigma_ranking"] = std::move(ranking);
  j["registry_deltas"] = std::move(deltas);
  return j;
}

nlohmann::ordered_json to_json(const ReferenceEntry& entry) {
  nlohmann::ordered_json j;
  j["scenario"] = to_token(entry.scenario);
  j["environment"] = to_token(entry.environment);
  j["model"] = std::string(model_name(entry.model()));
  j["freq_ghz_set"] = frequency_list(entry.frequencies_ghz);
  j["dist_min_m"] = r6(entry.dist_min_m);
  j["dist_max_m"] = r6(entry.dist_max_m);
  j["params"] = param_map(entry.params);
  j["sigma_db"] = r6(entry.sigma_db);
  if (entry.f0_derived)
    j["f0_derived"] = true;
  return j;
}

namespace {

using Row = std::array<std::string, 9>;

const Row header = {"Scenario", "Env", "Freq (GHz)", "Dist Range (m)", "Model", "PLE/α/n", "β (dB)", "γ/b", "σ (dB)"};

std::size_t display_width(const std::string& s) {
  // Count UTF-8 code points; every glyph used here is single width.
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string join_freqs(const std::vector<double>& freqs) {
  std::string out;
  for (double f : freqs) {
    if (!out.empty())
      out += ',';
    out += format_shortest(f);
  }
  return out;
}

// Slope, beta and gamma/b columns; "-" where the model has no such parameter.
std::array<std::string, 3> param_cells(const Model& m) {
  auto g = [](double x) { return format_significant(x, 6); };
  return std::visit(detail::overloaded{
                        [&](const FiParamsd& p) -> std::array<std::string, 3> { return {g(p.alpha), g(p.beta), "-"}; },
                        [&](const CiParamsd& p) -> std::array<std::string, 3> { return {g(p.n), "-", "-"}; },
                        [&](const AbgParamsd& p) -> std::array<std::string, 3> {
                          return {g(p.alpha), g(p.beta), g(p.gamma)};
                        },
                        [&](const CifParamsd& p) -> std::array<std::string, 3> { return {g(p.n), "-", g(p.b)}; },
                    },
                    m);
}

std::string render(const std::vector<Row>& rows, bool styled) {
  std::array<std::size_t, 9> width{};
  for (std::size_t c = 0; c < width.size(); ++c) {
    width[c] = display_width(header[c]);
    for (const auto& r : rows)
      width[c] = std::max(width[c], display_width(r[c]));
  }
  auto line = [&](const Row& r) {
    std::string out;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c > 0)
        out += "  ";
      out += r[c];
      if (c + 1 < r.size())
        out.append(width[c] - display_width(r[c]), ' ');
    }
    return out;
  };
  std::ostringstream os;
  if (styled)
    os << "\x1b[1m" << line(header) << "\x1b[0m\n";
  else
    os << line(header) << '\n';
  for (const auto& r : rows)
    os << line(r) << '\n';
  return os.str();
}

std::string range_text(double lo, double hi) { return format_significant(lo, 4) + "-" + format_significant(hi, 4); }

Row fit_row(const FitResult& fit, const DatasetSummary& s) {
  const auto p = param_cells(fit.params);
  return Row{s.scenario ? display_name(*s.scenario) : "mixed",
             s.environment ? display_name(*s.environment) : "mixed",
             join_freqs(s.frequencies_ghz),
             range_text(s.dist_min_m, s.dist_max_m),
             std::string(model_name(fit.model())),
             p[0],
             p[1],
             p[2],
             format_significant(fit.sigma_db, 6)};
}

} // namespace

std::string to_table(const FitResult& fit, const DatasetSummary& summary, bool styled) {
  std::string out = render({fit_row(fit, summary)}, styled);
  if (fit.f0_used)
    out += "f0: " + format_shortest(*fit.f0_used) + " GHz\n";
  if (!fit.note.empty())
    out += "note: " + fit.note + "\n";
  return out;
}

std::string to_table(const ComparisonReport& report, bool styled) {
  std::vector<Row> rows;
  for (const auto& e : report.entries)
    if (e.fit)
      rows.push_back(fit_row(*e.fit, report.summary));
  std::ostringstream os;
  os << render(rows, styled);
  os << "\nsigma ranking:";
  for (std::size_t i = 0; i < report.sigma_ranking.size(); ++i)
    os << (i == 0 ? " " : " <= ") << model_name(report.sigma_ranking[i]);
  os << '\n';
  for (const auto& e : report.entries) {
    if (!e.fit)
      os << "skipped " << model_name(e.model) << ": " << e.skipped_reason << '\n';
    else if (!e.fit->note.empty())
      os << "note " << model_name(e.model) << ": " << e.fit->note << '\n';
    if (e.fit && e.fit->f0_used)
      os << "f0 " << model_name(e.model) << ": " << format_shortest(*e.fit->f0_used) << " GHz\n";
  }
  for (const auto& e : report.entries) {
    if (!e.delta)
      continue;
    os << "registry " << model_name(e.model) << ":";
    for (const auto& p : e.delta->params)
      os << ' ' << p.name << ' ' << format_significant(p.fitted, 4) << " vs " << format_significant(p.reference, 4);
    os << ", sigma " << format_significant(e.delta->sigma_fitted, 4) << " vs "
       << format_significant(e.delta->reference.sigma_db, 4) << " dB\n";
  }
  return os.str();
}

std::string registry_table(bool styled) {
  std::vector<Row> rows;
  for (const auto& e : reference_entries()) {
    const auto p = param_cells(e.params);
    rows.push_back(Row{display_name(e.scenario), display_name(e.environment), join_freqs(e.frequencies_ghz),
                       range_text(e.dist_min_m, e.dist_max_m), std::string(model_name(e.model())), p[0], p[1], p[2],
                       format_significant(e.sigma_db, 6)});
  }
  return render(rows, styled);
}

} // namespace plm
