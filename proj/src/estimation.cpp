// SPDX-License-Identifier: Apache-2.0
#include "plm/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plm/linalg.hpp"

namespace plm {

namespace {

// 10 log10(d): the regression abscissa shared by every model.
Eigen::VectorXd log_distance(const SampleColumns& cols) { return (10.0 * cols.dist_m.log10()).matrix(); }

// Path loss in excess of the 1 m free space anchor, per sample.
Eigen::VectorXd excess_over_fspl(std::span<const PathLossSample> samples) {
  Eigen::VectorXd a(static_cast<Eigen::Index>(samples.size()));
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    a(i) = s.path_loss_db - fspl_1m(s.freq);
  }
  return a;
}

double rms(const Eigen::VectorXd& r) { return std::sqrt(r.squaredNorm() / static_cast<double>(r.size())); }

void require_samples(std::span<const PathLossSample> samples) {
  if (samples.empty())
    throw DomainError("cannot fit an empty sample set");
}

std::size_t distinct_count(const Eigen::ArrayXd& values) {
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

FitResult make_result(Model params, Eigen::VectorXd residuals, std::span<const PathLossSample> samples) {
  FitResult r;
  r.params = std::move(params);
  r.sigma_db = rms(residuals);
  r.residuals = std::move(residuals);
  r.sample_count = samples.size();
  r.frequency_set = frequency_set(samples);
  return r;
}

FrequencyGHz resolve_f0(std::span<const PathLossSample> samples, const F0Mode& mode) {
  if (mode.fixed)
    return *mode.fixed;
  const auto counts = frequency_counts(samples);
  return compute_f0(counts);
}

} // namespace

FitResult fit_ci(std::span<const PathLossSample> samples) {
  require_samples(samples);
  const SampleColumns cols(samples);
  const Eigen::VectorXd d = log_distance(cols);
  const Eigen::VectorXd a = excess_over_fspl(samples);

  const double sdd = d.squaredNorm();
  if (sdd == 0.0)
    throw DegenerateGeometryError("CI fit needs at least one sample beyond 1 m");
  const double n = a.dot(d) / sdd;
  return make_result(CiParamsd{n}, a - n * d, samples);
}

FitResult fit_fi(std::span<const PathLossSample> samples) {
  require_samples(samples);
  const SampleColumns cols(samples);
  if (distinct_count(cols.dist_m) < 2)
    throw SingularDesignError("FI fit needs at least two distinct distances");

  Eigen::Matrix<double, Eigen::Dynamic, 2> x(cols.size(), 2);
  x.col(0) = log_distance(cols);
  x.col(1).setOnes();
  const Eigen::VectorXd y = cols.path_loss_db.matrix();
  const Eigen::Vector2d coef = least_squares<double, 2>(x, y);
  return make_result(FiParamsd{coef(0), coef(1)}, y - x * coef, samples);
}

FitResult fit_abg(std::span<const PathLossSample> samples) {
  require_samples(samples);
  const SampleColumns cols(samples);
  if (distinct_count(cols.freq_ghz) < 2)
    throw SingularDesignError("ABG fit needs at least two distinct frequencies");
  if (distinct_count(cols.dist_m) < 2)
    throw SingularDesignError("ABG fit needs at least two distinct distances");

  Eigen::Matrix<double, Eigen::Dynamic, 3> x(cols.size(), 3);
  x.col(0) = log_distance(cols);
  x.col(1).setOnes();
  x.col(2) = (10.0 * cols.freq_ghz.log10()).matrix();
  const Eigen::VectorXd y = cols.path_loss_db.matrix();
  const Eigen::Vector3d coef = least_squares<double, 3>(x, y);
  return make_result(AbgParamsd{coef(0), coef(1), coef(2)}, y - x * coef, samples);
}

FitResult fit_cif(std::span<const PathLossSample> samples, F0Mode f0_mode) {
  require_samples(samples);
  const FrequencyGHz f0 = resolve_f0(samples, f0_mode);
  const auto freqs = frequency_set(samples);

  if (freqs.size() == 1) {
    FitResult ci = fit_ci(samples);
    const double n = std::get<CiParamsd>(ci.params).n;
    ci.params = CifParamsd{n, 0.0, f0};
    ci.f0_used = f0.ghz();
    ci.note = "single frequency: reverts to CI (b = 0)";
    return ci;
  }

  const SampleColumns cols(samples);
  const Eigen::VectorXd d = log_distance(cols);
  if (d.squaredNorm() == 0.0)
    throw DegenerateGeometryError("CIF fit needs at least one sample beyond 1 m");
  const Eigen::VectorXd a = excess_over_fspl(samples);

  // The model is linear in (n, n b): A = n x1 + (n b) x2.
  Eigen::Matrix<double, Eigen::Dynamic, 2> x(cols.size(), 2);
  x.col(0) = d;
  x.col(1) = (d.array() * ((cols.freq_ghz - f0.ghz()) / f0.ghz())).matrix();
  const Eigen::Vector2d c = least_squares<double, 2>(x, a);
  if (std::abs(c(0)) < 1e-6)
    throw UnstableParameterError("CIF distance coefficient n is ~0; b = (n b) / n is undefined");

  FitResult r = make_result(CifParamsd{c(0), c(1) / c(0), f0}, a - x * c, samples);
  r.f0_used = f0.ghz();
  return r;
}

FitResult fit(ModelKind kind, std::span<const PathLossSample> samples, F0Mode f0_mode) {
  switch (kind) {
  case ModelKind::fi:
    return fit_fi(samples);
  case ModelKind::ci:
    return fit_ci(samples);
  case ModelKind::abg:
    return fit_abg(samples);
  case ModelKind::cif:
    return fit_cif(samples, f0_mode);
  }
  throw DomainError("unknown model kind");
}

ResidualStats residual_stats(std::span<const PathLossSample> samples, const ModelEvaluator& model) {
  require_samples(samples);
  Eigen::VectorXd r(static_cast<Eigen::Index>(samples.size()));
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    r(i) = s.path_loss_db - model(s.freq, s.dist);
  }
  return ResidualStats{rms(r), std::move(r)};
}

ResidualStats residual_stats(std::span<const PathLossSample> samples, const Model& model) {
  return residual_stats(samples, [&model](FrequencyGHz f, DistanceM d) { return evaluate(model, f, d); });
}

namespace {

std::size_t parameter_count(ModelKind kind) {
  switch (kind) {
  case ModelKind::fi:
    return 2;
  case ModelKind::ci:
    return 1;
  case ModelKind::abg:
    return 3;
  case ModelKind::cif:
    return 2;
  }
  return 0;
}

std::size_t axis_points(const GridAxis& axis) {
  if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi) || !(axis.step > 0.0) || axis.hi < axis.lo)
    throw DomainError("grid axis needs finite lo <= hi and step > 0");
  return static_cast<std::size_t>(std::floor((axis.hi - axis.lo) / axis.step + 1e-9)) + 1;
}

} // namespace

GridResult grid_oracle_fit(std::span<const PathLossSample> samples, ModelKind kind, const GridSpec& grid,
                           F0Mode f0_mode) {
  require_samples(samples);
  const std::size_t dims = parameter_count(kind);
  if (grid.axes.size() != dims)
    throw DomainError("grid must have one axis per model parameter (" + std::to_string(dims) + ")");
  std::vector<std::size_t> sizes;
  for (const auto& axis : grid.axes)
    sizes.push_back(axis_points(axis));

  const FrequencyGHz f0 = kind == ModelKind::cif ? resolve_f0(samples, f0_mode) : FrequencyGHz(1.0);

  // Per-sample terms, computed directly from the model equations.
  const std::size_t n = samples.size();
  std::vector<double> pl(n), logd(n), logf(n), fspl(n), dev(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = samples[i];
    pl[i] = s.path_loss_db;
    logd[i] = std::log10(s.dist.meters());
    logf[i] = std::log10(s.freq.ghz());
    fspl[i] = fspl_1m(s.freq);
    dev[i] = (s.freq.ghz() - f0.ghz()) / f0.ghz();
  }

  auto mean_square = [&](const std::vector<double>& p) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double model = 0.0;
      switch (kind) {
      case ModelKind::fi:
        model = 10.0 * p[0] * logd[i] + p[1];
        break;
      case ModelKind::ci:
        model = fspl[i] + 10.0 * p[0] * logd[i];
        break;
      case ModelKind::abg:
        model = 10.0 * p[0] * logd[i] + p[1] + 10.0 * p[2] * logf[i];
        break;
      case ModelKind::cif:
        model = fspl[i] + 10.0 * p[0] * (1.0 + p[1] * dev[i]) * logd[i];
        break;
      }
      const double r = pl[i] - model;
      acc += r * r;
    }
    return acc / static_cast<double>(n);
  };

  std::vector<std::size_t> index(dims, 0);
  std::vector<double> point(dims), best_point(dims);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    for (std::size_t k = 0; k < dims; ++k)
      point[k] = grid.axes[k].lo + static_cast<double>(index[k]) * grid.axes[k].step;
    const double ms = mean_square(point);
    if (ms < best) {
      best = ms;
      best_point = point;
    }
    // Odometer increment, last axis fastest.
    std::size_t k = dims;
    while (k > 0) {
      --k;
      if (++index[k] < sizes[k])
        break;
      index[k] = 0;
      if (k == 0) {
        k = dims + 1;
        break;
      }
    }
    if (k == dims + 1)
      break;
  }

  Model params;
  switch (kind) {
  case ModelKind::fi:
    params = FiParamsd{best_point[0], best_point[1]};
    break;
  case ModelKind::ci:
    params = CiParamsd{best_point[0]};
    break;
  case ModelKind::abg:
    params = AbgParamsd{best_point[0], best_point[1], best_point[2]};
    break;
  case ModelKind::cif:
    params = CifParamsd{best_point[0], best_point[1], f0};
    break;
  }
  return GridResult{std::move(params), std::sqrt(best)};
}

} // namespace plm
