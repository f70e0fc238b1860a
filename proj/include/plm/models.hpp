// SPDX-License-Identifier: Apache-2.0
#pragma once

// Large-scale path loss models for millimeter-wave links.
//
// Every evaluator returns the mean path loss in dB; the log-normal shadowing
// term is not part of the deterministic model. All logarithms are base 10.
//
//   FI : PL(d)    = 10 alpha log10(d) + beta
//   CI : PL(f, d) = FSPL(f, 1 m) + 10 n log10(d)
//   ABG: PL(f, d) = 10 alpha log10(d) + beta + 10 gamma log10(f / 1 GHz)
//   CIF: PL(f, d) = FSPL(f, 1 m) + 10 n (1 + b (f - f0) / f0) log10(d)

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string_view>
#include <utility>
#include <variant>

#include <Eigen/Core>

#include "plm/units.hpp"

namespace plm {

template <typename Scalar>
inline constexpr Scalar speed_of_light = Scalar(299792458.0);

template <typename Scalar>
struct FiParams {
  Scalar alpha;
  Scalar beta;
};

template <typename Scalar>
struct CiParams {
  Scalar n;
};

template <typename Scalar>
struct AbgParams {
  Scalar alpha;
  Scalar beta;
  Scalar gamma;
};

template <typename Scalar>
struct CifParams {
  Scalar n;
  Scalar b;
  Frequency<Scalar> f0;
};

using FiParamsd = FiParams<double>;
using CiParamsd = CiParams<double>;
using AbgParamsd = AbgParams<double>;
using CifParamsd = CifParams<double>;

/// Free space path loss at the 1 m reference distance, 20 log10(4 pi f / c).
template <typename Scalar>
Scalar fspl_1m(Frequency<Scalar> f) {
  using std::log10;
  return Scalar(20) * log10(Scalar(4) * std::numbers::pi_v<Scalar> * f.hz() / speed_of_light<Scalar>);
}

/// ABG offset that makes ABG coincide with CI when alpha = n and gamma = 2.
template <typename Scalar>
Scalar abg_ci_equivalent_beta() {
  using std::log10;
  return Scalar(20) * log10(Scalar(4) * std::numbers::pi_v<Scalar> * Scalar(1e9) / speed_of_light<Scalar>);
}

template <typename Scalar>
Scalar eval_fi(const FiParams<Scalar>& p, Distance<Scalar> d) {
  using std::log10;
  return Scalar(10) * p.alpha * log10(d.meters()) + p.beta;
}

template <typename Scalar>
Scalar eval_ci(const CiParams<Scalar>& p, Frequency<Scalar> f, Distance<Scalar> d) {
  using std::log10;
  return fspl_1m(f) + Scalar(10) * p.n * log10(d.meters());
}

template <typename Scalar>
Scalar eval_abg(const AbgParams<Scalar>& p, Frequency<Scalar> f, Distance<Scalar> d) {
  using std::log10;
  return Scalar(10) * p.alpha * log10(d.meters()) + p.beta + Scalar(10) * p.gamma * log10(f.ghz());
}

/// Frequency-weighted path loss exponent n (1 + b (f - f0) / f0).
template <typename Scalar>
Scalar cif_effective_exponent(const CifParams<Scalar>& p, Frequency<Scalar> f) {
  return p.n * (Scalar(1) + p.b * ((f.ghz() - p.f0.ghz()) / p.f0.ghz()));
}

// With b = 0 the effective exponent is exactly n, so this reduces to eval_ci
// bit for bit.
template <typename Scalar>
Scalar eval_cif(const CifParams<Scalar>& p, Frequency<Scalar> f, Distance<Scalar> d) {
  using std::log10;
  return fspl_1m(f) + Scalar(10) * cif_effective_exponent(p, f) * log10(d.meters());
}

namespace detail {

template <typename Derived>
void check_distances(const Eigen::ArrayBase<Derived>& d) {
  using Scalar = typename Derived::Scalar;
  if (!(d >= Scalar(1)).all() || !d.allFinite())
    throw DomainError("every distance must be >= 1 m");
}

} // namespace detail

// Vectorized evaluators over a column of distances in meters.

template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1> eval_fi(
    const FiParams<typename Derived::Scalar>& p, const Eigen::ArrayBase<Derived>& d) {
  using Scalar = typename Derived::Scalar;
  detail::check_distances(d);
  return Scalar(10) * p.alpha * d.log10() + p.beta;
}

template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1> eval_ci(
    const CiParams<typename Derived::Scalar>& p, Frequency<typename Derived::Scalar> f,
    const Eigen::ArrayBase<Derived>& d) {
  using Scalar = typename Derived::Scalar;
  detail::check_distances(d);
  return fspl_1m(f) + Scalar(10) * p.n * d.log10();
}

template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1> eval_abg(
    const AbgParams<typename Derived::Scalar>& p, Frequency<typename Derived::Scalar> f,
    const Eigen::ArrayBase<Derived>& d) {
  using Scalar = typename Derived::Scalar;
  using std::log10;
  detail::check_distances(d);
  return Scalar(10) * p.alpha * d.log10() + p.beta + Scalar(10) * p.gamma * log10(f.ghz());
}

template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1> eval_cif(
    const CifParams<typename Derived::Scalar>& p, Frequency<typename Derived::Scalar> f,
    const Eigen::ArrayBase<Derived>& d) {
  using Scalar = typename Derived::Scalar;
  detail::check_distances(d);
  return fspl_1m(f) + Scalar(10) * cif_effective_exponent(p, f) * d.log10();
}

/// Sample-count weighted mean frequency, rounded to the nearest integer GHz
/// (halfway values round away from zero).
FrequencyGHz compute_f0(std::span<const std::pair<FrequencyGHz, std::int64_t>> counts);

enum class ModelKind { fi, ci, abg, cif };

inline constexpr ModelKind all_model_kinds[] = {ModelKind::fi, ModelKind::ci, ModelKind::abg, ModelKind::cif};

std::string_view model_name(ModelKind kind); // "FI", "CI", ...
std::string_view model_token(ModelKind kind); // "fi", "ci", ...
ModelKind model_from_token(std::string_view token);

/// A model bound to its parameters.
using Model = std::variant<FiParamsd, CiParamsd, AbgParamsd, CifParamsd>;

ModelKind kind_of(const Model& m);
double evaluate(const Model& m, FrequencyGHz f, DistanceM d);

/// Path loss at d = 1 m for frequency f.
double anchor_value(const Model& m, FrequencyGHz f);

/// dB of additional loss per decade of distance, divided by 10.
double distance_slope(const Model& m, FrequencyGHz f);

} // namespace plm
