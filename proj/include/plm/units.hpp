// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <compare>
#include <string>

#include "plm/errors.hpp"

namespace plm {

/// Carrier frequency in GHz. Every model is defined for f >= 1 GHz.
template <typename Scalar>
class Frequency {
public:
  explicit Frequency(Scalar ghz) : ghz_(ghz) {
    using std::isfinite;
    if (!isfinite(ghz) || ghz < Scalar(1))
      throw DomainError("frequency must be >= 1 GHz, got " + std::to_string(double(ghz)));
  }

  Scalar ghz() const noexcept { return ghz_; }
  Scalar hz() const noexcept { return ghz_ * Scalar(1e9); }

  friend auto operator<=>(const Frequency&, const Frequency&) = default;

private:
  Scalar ghz_;
};

/// 3D transmitter-receiver separation in meters, d >= 1 m.
template <typename Scalar>
class Distance {
public:
  explicit Distance(Scalar meters) : meters_(meters) {
    using std::isfinite;
    if (!isfinite(meters) || meters < Scalar(1))
      throw DomainError("distance must be >= 1 m, got " + std::to_string(double(meters)));
  }

  Scalar meters() const noexcept { return meters_; }

  friend auto operator<=>(const Distance&, const Distance&) = default;

private:
  Scalar meters_;
};

using FrequencyGHz = Frequency<double>;
using DistanceM = Distance<double>;

enum class Environment { los, nlos };

/// Measurement scenario. `other` carries a free-form, nonempty label.
class Scenario {
public:
  enum class Kind { umi_street_canyon, indoor_office, other };

  static Scenario umi_street_canyon() { return Scenario(Kind::umi_street_canyon, {}); }
  static Scenario indoor_office() { return Scenario(Kind::indoor_office, {}); }
  static Scenario other(std::string label) {
    if (label.empty())
      throw DomainError("scenario label must not be empty");
    return Scenario(Kind::other, std::move(label));
  }

  Kind kind() const noexcept { return kind_; }
  const std::string& label() const noexcept { return label_; }

  friend bool operator==(const Scenario&, const Scenario&) = default;

private:
  Scenario(Kind kind, std::string label) : kind_(kind), label_(std::move(label)) {}

  Kind kind_;
  std::string label_;
};

// Interchange tokens: umi_sc, indoor_office, other:<label>; los, nlos.
std::string to_token(const Scenario& s);
std::string to_token(Environment e);
Scenario scenario_from_token(const std::string& token);
Environment environment_from_token(const std::string& token);

// Short human labels used in tables ("UMi SC", "LOS").
std::string display_name(const Scenario& s);
std::string display_name(Environment e);

} // namespace plm
