// SPDX-License-Identifier: Apache-2.0
#include "plm/units.hpp"

namespace plm {

std::string to_token(const Scenario& s) {
  switch (s.kind()) {
  case Scenario::Kind::umi_street_canyon:
    return "umi_sc";
  case Scenario::Kind::indoor_office:
    return "indoor_office";
  case Scenario::Kind::other:
    return "other:" + s.label();
  }
  return {};
}

std::string to_token(Environment e) { return e == Environment::los ? "los" : "nlos"; }

Scenario scenario_from_token(const std::string& token) {
  if (token == "umi_sc")
    return Scenario::umi_street_canyon();
  if (token == "indoor_office")
    return Scenario::indoor_office();
  constexpr std::string_view prefix = "other:";
  if (token.starts_with(prefix) && token.size() > prefix.size())
    return Scenario::other(token.substr(prefix.size()));
  throw DomainError("unknown scenario '" + token + "' (expected umi_sc, indoor_office or other:<label>)");
}

Environment environment_from_token(const std::string& token) {
  if (token == "los")
    return Environment::los;
  if (token == "nlos")
    return Environment::nlos;
  throw DomainError("unknown environment '" + token + "' (expected los or nlos)");
}

std::string display_name(const Scenario& s) {
  switch (s.kind()) {
  case Scenario::Kind::umi_street_canyon:
    return "UMi SC";
  case Scenario::Kind::indoor_office:
    return "Indoor Office";
  case Scenario::Kind::other:
    return s.label();
  }
  return {};
}

std::string display_name(Environment e) { return e == Environment::los ? "LOS" : "NLOS"; }

} // namespace plm
