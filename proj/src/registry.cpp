// SPDX-License-Identifier: Apache-2.0
#include "plm/registry.hpp"

#include <algorithm>
#include <sstream>

#include "plm/detail/overloaded.hpp"
#include "plm/format.hpp"

namespace plm {

namespace {

ReferenceEntry row(Scenario s, Environment e, std::vector<double> freqs, double dmin, double dmax, Model params,
                   double sigma) {
  const bool derived = std::holds_alternative<CifParamsd>(params);
  return ReferenceEntry{std::move(s), e, std::move(freqs), dmin, dmax, std::move(params), sigma, derived};
}

std::vector<ReferenceEntry> build_table() {
  const auto umi = Scenario::umi_street_canyon();
  const auto indoor = Scenario::indoor_office();
  constexpr auto los = Environment::los;
  constexpr auto nlos = Environment::nlos;
  const std::vector<double> multi{28.0, 73.5};
  const FrequencyGHz f0(51.0);

  return {
      // Single-frequency FI / CI. The 73 GHz band is labelled 73 here.
      row(umi, los, {28.0}, 31.0, 54.0, FiParamsd{3.9, 31.8}, 2.9),
      row(umi, los, {28.0}, 31.0, 54.0, CiParamsd{2.1}, 3.5),
      row(umi, los, {73.0}, 27.0, 54.0, FiParamsd{-0.8, 115.6}, 3.9),
      row(umi, los, {73.0}, 27.0, 54.0, CiParamsd{2.0}, 4.9),
      row(umi, nlos, {28.0}, 61.0, 186.0, FiParamsd{2.5, 80.6}, 9.7),
      row(umi, nlos, {28.0}, 61.0, 186.0, CiParamsd{3.4}, 9.7),
      row(umi, nlos, {73.0}, 48.0, 190.0, FiParamsd{2.9, 80.6}, 7.8),
      row(umi, nlos, {73.0}, 48.0, 190.0, CiParamsd{3.4}, 7.9),
      row(indoor, los, {28.0}, 4.1, 21.3, FiParamsd{1.2, 60.4}, 1.8),
      row(indoor, los, {28.0}, 4.1, 21.3, CiParamsd{1.1}, 1.8),
      row(indoor, los, {73.0}, 4.1, 21.3, FiParamsd{0.5, 77.9}, 1.4),
      row(indoor, los, {73.0}, 4.1, 21.3, CiParamsd{1.3}, 2.4),
      row(indoor, nlos, {28.0}, 3.9, 45.9, FiParamsd{3.5, 51.3}, 9.3),
      row(indoor, nlos, {28.0}, 3.9, 45.9, CiParamsd{2.7}, 9.6),
      row(indoor, nlos, {73.0}, 3.9, 41.9, FiParamsd{2.7, 76.3}, 11.2),
      row(indoor, nlos, {73.0}, 3.9, 41.9, CiParamsd{3.2}, 11.3),

      // Multi-frequency ABG / CI / CIF over {28, 73.5} GHz.
      row(umi, los, multi, 27.0, 54.0, AbgParamsd{1.0, 55.0, 1.7}, 4.3),
      row(umi, los, multi, 27.0, 54.0, CiParamsd{2.0}, 4.5),
      row(umi, los, multi, 27.0, 54.0, CifParamsd{2.0, -0.06, f0}, 4.4),
      row(umi, nlos, multi, 48.0, 190.0, AbgParamsd{2.8, 46.7, 1.9}, 8.4),
      row(umi, nlos, multi, 48.0, 190.0, CiParamsd{3.4}, 8.4),
      row(umi, nlos, multi, 48.0, 190.0, CifParamsd{3.4, 0.0, f0}, 8.4),
      row(indoor, los, multi, 4.1, 21.3, AbgParamsd{0.9, 26.8, 2.6}, 1.8),
      row(indoor, los, multi, 4.1, 21.3, CiParamsd{1.2}, 2.3),
      row(indoor, los, multi, 4.1, 21.3, CifParamsd{1.2, 0.18, f0}, 2.1),
      row(indoor, nlos, multi, 3.9, 45.9, AbgParamsd{3.1, 1.3, 3.8}, 10.3),
      row(indoor, nlos, multi, 3.9, 45.9, CiParamsd{2.9}, 10.9),
      row(indoor, nlos, multi, 3.9, 45.9, CifParamsd{3.0, 0.21, f0}, 10.4),
  };
}

} // namespace

std::span<const ReferenceEntry> reference_entries() {
  static const std::vector<ReferenceEntry> table = build_table();
  return table;
}

std::optional<ReferenceEntry> reference_lookup(const Scenario& scenario, Environment env,
                                               std::span<const double> frequencies_ghz, ModelKind model) {
  std::vector<double> key(frequencies_ghz.begin(), frequencies_ghz.end());
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  for (const auto& entry : reference_entries()) {
    if (entry.scenario == scenario && entry.environment == env && entry.model() == model &&
        entry.frequencies_ghz == key)
      return entry;
  }
  return std::nullopt;
}

std::string registry_csv() {
  std::ostringstream out;
  out << "scenario,environment,model,freq_ghz_list,dist_min_m,dist_max_m,ple_or_alpha_or_n,beta_db,gamma_or_b,"
         "sigma_db\n";
  for (const auto& e : reference_entries()) {
    std::string freqs;
    for (double f : e.frequencies_ghz) {
      if (!freqs.empty())
        freqs += ';';
      freqs += format_shortest(f);
    }
    std::string slope, beta, third;
    std::visit(detail::overloaded{
                   [&](const FiParamsd& p) {
                     slope = format_shortest(p.alpha);
                     beta = format_shortest(p.beta);
                   },
                   [&](const CiParamsd& p) { slope = format_shortest(p.n); },
                   [&](const AbgParamsd& p) {
                     slope = format_shortest(p.alpha);
                     beta = format_shortest(p.beta);
                     third = format_shortest(p.gamma);
                   },
                   [&](const CifParamsd& p) {
                     slope = format_shortest(p.n);
                     third = format_shortest(p.b);
                   },
               },
               e.params);
    out << to_token(e.scenario) << ',' << to_token(e.environment) << ',' << model_token(e.model()) << ',' << freqs
        << ',' << format_shortest(e.dist_min_m) << ',' << format_shortest(e.dist_max_m) << ',' << slope << ','
        << beta << ',' << third << ',' << format_shortest(e.sigma_db) << '\n';
  }
  return out.str();
}

} // namespace plm
