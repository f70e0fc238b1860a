// SPDX-License-Identifier: Apache-2.0
#include "plm/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "plm/analysis.hpp"
#include "plm/dataset.hpp"
#include "plm/estimation.hpp"
#include "plm/format.hpp"
#include "plm/registry.hpp"
#include "plm/serialize.hpp"

namespace plm::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model;
  std::string input;
  std::string env;
  std::string scenario;
  std::string f0 = "auto";
  double f0_ghz = 0.0;
  std::vector<double> freqs;
  std::vector<double> distances;
  double dmin = 0.0;
  double dmax = 0.0;
  std::int64_t count = 0;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  double max_pl = 0.0;
  std::string output;
  std::string format;
  bool residuals = false;
  double n = 0.0, alpha = 0.0, beta = 0.0, gamma = 0.0, b = 0.0;
  std::string title;
};

const CLI::Validator scenario_token(
    [](std::string& s) -> std::string {
      try {
        scenario_from_token(s);
        return {};
      } catch (const DomainError& e) {
        return e.what();
      }
    },
    "umi_sc|indoor_office|other:<label>", "scenario");

const CLI::Validator f0_token(
    [](std::string& s) -> std::string {
      double v = 0.0;
      if (s == "auto" || (parse_double(s, v) && v >= 1.0))
        return {};
      return "--f0 takes 'auto' or a frequency >= 1 GHz";
    },
    "auto|GHZ", "f0");

void add_output(CLI::App* sub, Options& o) { sub->add_option("-o,--output", o.output, "Write output to this file"); }

void add_model(CLI::App* sub, Options& o, std::vector<std::string> choices, std::string fallback) {
  auto* opt = sub->add_option("--model", o.model, "Path loss model")->check(CLI::IsMember(choices));
  if (fallback.empty())
    opt->required();
  else
    opt->default_str(std::move(fallback));
}

void add_model_params(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "CI path loss exponent / CIF distance exponent n");
  sub->add_option("--alpha", o.alpha, "FI/ABG distance coefficient");
  sub->add_option("--beta", o.beta, "FI/ABG offset (dB)");
  sub->add_option("--gamma", o.gamma, "ABG frequency coefficient");
  sub->add_option("--b", o.b, "CIF frequency balance coefficient");
}

void add_f0(CLI::App* sub, Options& o) {
  auto* f0 = sub->add_option("--f0", o.f0, "CIF reference frequency: 'auto' or GHz")->check(f0_token);
  auto* f0_ghz = sub->add_option("--f0-ghz", o.f0_ghz, "CIF reference frequency in GHz")->check(CLI::Range(1.0, 1e6));
  f0->excludes(f0_ghz);
}

void add_filters(CLI::App* sub, Options& o) {
  sub->add_option("--env", o.env, "Keep only this environment")->check(CLI::IsMember({"los", "nlos"}));
  sub->add_option("--scenario", o.scenario, "Keep only this scenario")->check(scenario_token);
  sub->add_option("--freq", o.freqs, "Keep only these frequencies in GHz (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
}

void add_format(CLI::App* sub, Options& o, std::vector<std::string> choices) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(choices))->default_str(choices.front());
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "Measurement CSV file")->required();
}

void build(CLI::App& app, Options& o) {
  app.require_subcommand(1, 1);
  app.failure_message(CLI::FailureMessage::help);

  auto* fit = app.add_subcommand("fit", "Fit path loss models to a measurement CSV");
  add_input(fit, o);
  add_model(fit, o, {"fi", "ci", "abg", "cif", "all"}, "");
  add_filters(fit, o);
  add_f0(fit, o);
  add_format(fit, o, {"json", "table"});
  fit->add_flag("--residuals", o.residuals, "Include per-sample residuals in JSON output");
  add_output(fit, o);

  auto* eval = app.add_subcommand("eval", "Evaluate a model's mean path loss");
  add_model(eval, o, {"fi", "ci", "abg", "cif"}, "");
  add_model_params(eval, o);
  add_f0(eval, o);
  eval->add_option("--freq", o.freqs, "Frequency in GHz (repeatable)")
      ->required()
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  eval->add_option("--distance", o.distances, "T-R distance in m (repeatable)")
      ->required()
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  add_format(eval, o, {"json", "table", "csv"});
  add_output(eval, o);

  auto* gen = app.add_subcommand("gen", "Generate synthetic shadowed measurements as CSV");
  add_model(gen, o, {"fi", "ci", "abg", "cif"}, "");
  add_model_params(gen, o);
  add_f0(gen, o);
  gen->add_option("--freq", o.freqs, "Frequency in GHz (repeatable)")
      ->required()
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  gen->add_option("--count", o.count, "Samples per frequency")->required();
  gen->add_option("--dmin", o.dmin, "Minimum distance in m")->required();
  gen->add_option("--dmax", o.dmax, "Maximum distance in m")->required();
  gen->add_option("--sigma", o.sigma, "Shadow fading standard deviation in dB")->capture_default_str();
  gen->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  gen->add_option("--scenario", o.scenario, "Scenario tag for the samples")->check(scenario_token);
  gen->add_option("--env", o.env, "Environment tag for the samples")->check(CLI::IsMember({"los", "nlos"}));
  add_output(gen, o);

  auto* compare = app.add_subcommand("compare", "Fit several models and rank them by sigma");
  add_input(compare, o);
  add_model(compare, o, {"fi", "ci", "abg", "cif", "all"}, "all");
  add_filters(compare, o);
  add_f0(compare, o);
  add_format(compare, o, {"table", "json"});
  compare->add_flag("--residuals", o.residuals, "Include per-sample residuals in JSON output");
  add_output(compare, o);

  auto* range = app.add_subcommand("range", "Largest distance within a path loss budget");
  add_model(range, o, {"fi", "ci", "abg", "cif"}, "");
  add_model_params(range, o);
  add_f0(range, o);
  range->add_option("--freq", o.freqs, "Frequency in GHz (not needed for fi)")->expected(1);
  range->add_option("--max-pl", o.max_pl, "Maximum allowed path loss in dB")->required();
  add_format(range, o, {"json", "table"});
  add_output(range, o);

  auto* plot = app.add_subcommand("plot", "Render samples and fitted models as SVG");
  add_input(plot, o);
  add_model(plot, o, {"fi", "ci", "abg", "cif", "all", "none"}, "all");
  add_filters(plot, o);
  add_f0(plot, o);
  plot->add_option("--title", o.title, "Plot title");
  add_output(plot, o);

  auto* registry = app.add_subcommand("registry", "Print the reference parameter table");
  add_format(registry, o, {"csv", "json", "table"});
  add_output(registry, o);
}

bool styled_output(const std::ostream& out, bool to_file) {
  const char* env = std::getenv("PLM_COLOR");
  const std::string mode = env ? env : "auto";
  if (mode == "always")
    return true;
  if (mode == "never" || to_file)
    return false;
  return &out == &std::cout && ::isatty(STDOUT_FILENO);
}

F0Mode f0_mode(const Options& o, const CLI::App& sub) {
  if (sub.count("--f0-ghz") > 0)
    return F0Mode::explicit_value(FrequencyGHz(o.f0_ghz));
  double v = 0.0;
  if (o.f0 != "auto" && parse_double(o.f0, v))
    return F0Mode::explicit_value(FrequencyGHz(v));
  return F0Mode::automatic();
}

Model model_from_flags(ModelKind kind, const Options& o, const CLI::App& sub, std::optional<FrequencyGHz> f0) {
  std::vector<std::string> needed;
  switch (kind) {
  case ModelKind::fi:
    needed = {"--alpha", "--beta"};
    break;
  case ModelKind::ci:
    needed = {"--n"};
    break;
  case ModelKind::abg:
    needed = {"--alpha", "--beta", "--gamma"};
    break;
  case ModelKind::cif:
    needed = {"--n", "--b"};
    break;
  }
  for (const std::string flag : {"--n", "--alpha", "--beta", "--gamma", "--b"}) {
    const bool wanted = std::find(needed.begin(), needed.end(), flag) != needed.end();
    if (wanted && sub.count(flag) == 0)
      throw UsageError("model " + std::string(model_token(kind)) + " requires " + flag);
    if (!wanted && sub.count(flag) > 0)
      throw UsageError(flag + " does not apply to model " + std::string(model_token(kind)));
  }
  switch (kind) {
  case ModelKind::fi:
    return FiParamsd{o.alpha, o.beta};
  case ModelKind::ci:
    return CiParamsd{o.n};
  case ModelKind::abg:
    return AbgParamsd{o.alpha, o.beta, o.gamma};
  case ModelKind::cif:
    if (!f0)
      throw UsageError("model cif needs an explicit reference frequency (--f0 <GHz> or --f0-ghz)");
    return CifParamsd{o.n, o.b, *f0};
  }
  throw UsageError("unknown model");
}

Dataset load_filtered(const Options& o, const CLI::App& sub) {
  std::ifstream in(o.input, std::ios::binary);
  if (!in)
    throw Error("cannot open input file '" + o.input + "'");
  Dataset ds = load_csv(in, o.input);
  if (sub.count("--env") > 0)
    ds = filter(ds, by_environment(environment_from_token(o.env)));
  if (sub.count("--scenario") > 0)
    ds = filter(ds, by_scenario(scenario_from_token(o.scenario)));
  if (!o.freqs.empty()) {
    const auto freqs = o.freqs;
    ds = filter(ds, [freqs](const PathLossSample& s) {
      return std::find(freqs.begin(), freqs.end(), s.freq.ghz()) != freqs.end();
    });
  }
  if (ds.empty())
    throw Error("no samples left after filtering");
  return ds;
}

std::vector<ModelKind> requested_models(const std::string& token) {
  if (token == "all")
    return {std::begin(all_model_kinds), std::end(all_model_kinds)};
  if (token == "none")
    return {};
  return {model_from_token(token)};
}

std::string json_text(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::string run_fit(const Options& o, const CLI::App& sub, bool styled) {
  const Dataset ds = load_filtered(o, sub);
  const auto mode = f0_mode(o, sub);
  if (o.model == "all") {
    const auto kinds = requested_models(o.model);
    const auto report = compare_models(ds, kinds, mode);
    return o.format == "json" ? json_text(to_json(report, o.residuals)) : to_table(report, styled);
  }
  const FitResult result = fit(model_from_token(o.model), ds.samples(), mode);
  if (o.format == "json")
    return json_text(to_json(result, o.residuals));
  return to_table(result, summarize(ds), styled);
}

std::string run_compare(const Options& o, const CLI::App& sub, bool styled) {
  const Dataset ds = load_filtered(o, sub);
  const auto report = compare_models(ds, requested_models(o.model), f0_mode(o, sub));
  return o.format == "json" ? json_text(to_json(report, o.residuals)) : to_table(report, styled);
}

std::string run_eval(const Options& o, const CLI::App& sub) {
  const auto mode = f0_mode(o, sub);
  const Model model = model_from_flags(model_from_token(o.model), o, sub, mode.fixed);
  std::ostringstream os;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (o.format == "csv")
    os << "frequency_ghz,distance_m,path_loss_db\n";
  else if (o.format == "table")
    os << "freq_ghz  distance_m  path_loss_db\n";
  for (double fghz : o.freqs) {
    const FrequencyGHz f(fghz);
    for (double dm : o.distances) {
      const DistanceM d(dm);
      const double pl = evaluate(model, f, d);
      if (o.format == "csv")
        os << format_shortest(fghz) << ',' << format_shortest(dm) << ',' << format_significant(pl) << '\n';
      else if (o.format == "table")
        os << format_shortest(fghz) << "  " << format_shortest(dm) << "  " << format_significant(pl) << '\n';
      else
        rows.push_back({{"freq_ghz", round_significant(fghz)},
                        {"distance_m", round_significant(dm)},
                        {"path_loss_db", round_significant(pl)}});
    }
  }
  if (o.format == "json")
    return json_text(rows);
  return os.str();
}

std::string run_gen(const Options& o, const CLI::App& sub) {
  if (o.count < 1)
    throw UsageError("--count must be >= 1");
  GenSpec spec{CiParamsd{0.0}, {}, o.dmin, o.dmax, o.sigma, o.seed};
  for (double f : o.freqs)
    spec.freq_plan.emplace_back(FrequencyGHz(f), o.count);
  const ModelKind kind = model_from_token(o.model);
  auto mode = f0_mode(o, sub);
  if (kind == ModelKind::cif && !mode.fixed)
    mode.fixed = compute_f0(spec.freq_plan);
  spec.model = model_from_flags(kind, o, sub, mode.fixed);
  if (sub.count("--scenario") > 0)
    spec.scenario = scenario_from_token(o.scenario);
  if (sub.count("--env") > 0)
    spec.environment = environment_from_token(o.env);
  std::ostringstream os;
  write_csv(generate_synthetic(spec), os);
  return os.str();
}

std::string run_range(const Options& o, const CLI::App& sub) {
  const auto mode = f0_mode(o, sub);
  const Model model = model_from_flags(model_from_token(o.model), o, sub, mode.fixed);
  if (o.freqs.empty() && kind_of(model) != ModelKind::fi)
    throw UsageError("--freq is required for model " + o.model);
  // FI has no frequency term; 1 GHz stands in when none is given.
  const FrequencyGHz f(o.freqs.empty() ? 1.0 : o.freqs.front());
  const DistanceM d = max_range(RangeQuery{model, f, o.max_pl});
  if (o.format == "table")
    return "max range: " + format_significant(d.meters()) + " m\n";
  nlohmann::ordered_json j;
  j["model"] = std::string(model_name(kind_of(model)));
  j["freq_ghz"] = o.freqs.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(f.ghz());
  j["max_path_loss_db"] = round_significant(o.max_pl);
  j["distance_m"] = round_significant(d.meters());
  return json_text(j);
}

std::string run_plot(const Options& o, const CLI::App& sub) {
  const Dataset ds = load_filtered(o, sub);
  std::vector<FitResult> fits;
  const auto kinds = requested_models(o.model);
  if (o.model == "all") {
    for (auto& e : compare_models(ds, kinds, f0_mode(o, sub)).entries)
      if (e.fit)
        fits.push_back(std::move(*e.fit));
  } else {
    for (ModelKind k : kinds)
      fits.push_back(fit(k, ds.samples(), f0_mode(o, sub)));
  }
  PlotStyle style;
  if (!o.title.empty())
    style.title = o.title;
  return emit_plot(ds, fits, style);
}

std::string run_registry(const Options& o, bool styled) {
  if (o.format == "csv")
    return registry_csv();
  if (o.format == "table")
    return registry_table(styled);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& e : reference_entries())
    rows.push_back(to_json(e));
  return json_text(rows);
}

std::vector<std::string> reversed(const std::vector<std::string>& args) { return {args.rbegin(), args.rend()}; }

// Options shares one record across verbs, so per-verb defaults are applied
// only after parsing, from the chosen subcommand.
void apply_verb_defaults(const CLI::App& sub, Options& o) {
  auto fill = [&sub](const char* name, std::string& value) {
    const CLI::Option* opt = sub.get_option_no_throw(name);
    if (opt != nullptr && opt->count() == 0)
      value = opt->get_default_str();
  };
  fill("--model", o.model);
  fill("--format", o.format);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Millimeter-wave large-scale path loss model toolkit", "plm"};
  build(app, o);

  try {
    auto rev = reversed(args);
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? ok : usage_error;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string verb = sub->get_name();
  apply_verb_defaults(*sub, o);
  const bool to_file = !o.output.empty();
  const bool styled = styled_output(out, to_file);
  try {
    std::string result;
    if (verb == "fit")
      result = run_fit(o, *sub, styled);
    else if (verb == "compare")
      result = run_compare(o, *sub, styled);
    else if (verb == "eval")
      result = run_eval(o, *sub);
    else if (verb == "gen")
      result = run_gen(o, *sub);
    else if (verb == "range")
      result = run_range(o, *sub);
    else if (verb == "plot")
      result = run_plot(o, *sub);
    else
      result = run_registry(o, styled);

    if (to_file) {
      std::ofstream file(o.output, std::ios::binary);
      if (!file)
        throw Error("cannot open output file '" + o.output + "'");
      file << result;
      if (!file)
        throw Error("failed writing '" + o.output + "'");
    } else {
      out << result;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << sub->help();
    return usage_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return validation_error;
  }
  return ok;
}

const std::map<std::string, std::set<std::string>>& documented_flags() {
  static const std::map<std::string, std::set<std::string>> flags = {
      {"fit",
       {"-h", "--help", "--input", "--model", "--env", "--scenario", "--freq", "--f0", "--f0-ghz", "--format", "--residuals",
        "-o", "--output"}},
      {"eval",
       {"-h", "--help", "--model", "--n", "--alpha", "--beta", "--gamma", "--b", "--f0", "--f0-ghz", "--freq", "--distance",
        "--format", "-o", "--output"}},
      {"gen",
       {"-h", "--help", "--model", "--n", "--alpha", "--beta", "--gamma", "--b", "--f0", "--f0-ghz", "--freq", "--count",
        "--dmin", "--dmax", "--sigma", "--seed", "--scenario", "--env", "-o", "--output"}},
      {"compare",
       {"-h", "--help", "--input", "--model", "--env", "--scenario", "--freq", "--f0", "--f0-ghz", "--format", "--residuals",
        "-o", "--output"}},
      {"range",
       {"-h", "--help", "--model", "--n", "--alpha", "--beta", "--gamma", "--b", "--f0", "--f0-ghz", "--freq", "--max-pl",
        "--format", "-o", "--output"}},
      {"plot",
       {"-h", "--help", "--input", "--model", "--env", "--scenario", "--freq", "--f0", "--f0-ghz", "--title", "-o",
        "--output"}},
      {"registry", {"-h", "--help", "--format", "-o", "--output"}},
  };
  return flags;
}

std::string help_text(const std::string& verb) {
  Options o;
  CLI::App app{"Millimeter-wave large-scale path loss model toolkit", "plm"};
  build(app, o);
  if (verb.empty())
    return app.help();
  return app.get_subcommand(verb)->help();
}

} // namespace plm::cli
