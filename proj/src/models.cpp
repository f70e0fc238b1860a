// SPDX-License-Identifier: Apache-2.0
#include "plm/models.hpp"

#include <string>

#include "plm/detail/overloaded.hpp"

namespace plm {

FrequencyGHz compute_f0(std::span<const std::pair<FrequencyGHz, std::int64_t>> counts) {
  if (counts.empty())
    throw DomainError("compute_f0 needs at least one frequency");
  double weighted = 0.0;
  double total = 0.0;
  for (const auto& [f, count] : counts) {
    if (count <= 0)
      throw DomainError("sample counts must be >= 1");
    weighted += f.ghz() * static_cast<double>(count);
    total += static_cast<double>(count);
  }
  // std::round rounds halfway cases away from zero.
  return FrequencyGHz(std::round(weighted / total));
}

std::string_view model_name(ModelKind kind) {
  switch (kind) {
  case ModelKind::fi:
    return "FI";
  case ModelKind::ci:
    return "CI";
  case ModelKind::abg:
    return "ABG";
  case ModelKind::cif:
    return "CIF";
  }
  return "?";
}

std::string_view model_token(ModelKind kind) {
  switch (kind) {
  case ModelKind::fi:
    return "fi";
  case ModelKind::ci:
    return "ci";
  case ModelKind::abg:
    return "abg";
  case ModelKind::cif:
    return "cif";
  }
  return "?";
}

ModelKind model_from_token(std::string_view token) {
  for (ModelKind k : all_model_kinds)
    if (token == model_token(k))
      return k;
  throw DomainError("unknown model '" + std::string(token) + "'");
}

using detail::overloaded;

ModelKind kind_of(const Model& m) {
  return std::visit(overloaded{
                        [](const FiParamsd&) { return ModelKind::fi; },
                        [](const CiParamsd&) { return ModelKind::ci; },
                        [](const AbgParamsd&) { return ModelKind::abg; },
                        [](const CifParamsd&) { return ModelKind::cif; },
                    },
                    m);
}

double evaluate(const Model& m, FrequencyGHz f, DistanceM d) {
  return std::visit(overloaded{
                        [&](const FiParamsd& p) { return eval_fi(p, d); },
                        [&](const CiParamsd& p) { return eval_ci(p, f, d); },
                        [&](const AbgParamsd& p) { return eval_abg(p, f, d); },
                        [&](const CifParamsd& p) { return eval_cif(p, f, d); },
                    },
                    m);
}

double anchor_value(const Model& m, FrequencyGHz f) {
  return std::visit(overloaded{
                        [&](const FiParamsd& p) { return p.beta; },
                        [&](const CiParamsd&) { return fspl_1m(f); },
                        [&](const AbgParamsd& p) { return p.beta + 10.0 * p.gamma * std::log10(f.ghz()); },
                        [&](const CifParamsd&) { return fspl_1m(f); },
                    },
                    m);
}

double distance_slope(const Model& m, FrequencyGHz f) {
  return std::visit(overloaded{
                        [&](const FiParamsd& p) { return p.alpha; },
                        [&](const CiParamsd& p) { return p.n; },
                        [&](const AbgParamsd& p) { return p.alpha; },
                        [&](const CifParamsd& p) { return cif_effective_exponent(p, f); },
                    },
                    m);
}

} // namespace plm
