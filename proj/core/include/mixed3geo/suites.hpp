#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mixed3geo/models.hpp"

namespace mixed3geo {

// A named batch of identity checks over one model. tol_overrides is keyed by
// assertion id, or by the bundle names "algebraic" / "one-deriv" /
// "two-deriv" to shift the defaults for a whole derivative order.
struct SuiteSpec {
  std::string suite_id;
  std::string model_key;
  int points = 32;
  int vectors_per_point = 8;
  std::uint64_t seed = 42;
  std::map<std::string, double> tol_overrides;
};

struct Assertion {
  std::string id;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  VecD worst_point;
};

// Deterministic: rerunning with an identical SuiteSpec reproduces every
// residual bit-for-bit; only wall_ms varies.
struct RunReport {
  SuiteSpec spec;
  std::vector<Assertion> assertions;
  std::vector<std::string> notes;
  int cases = 0;
  int skipped = 0;
  bool pass = true;
  double wall_ms = 0.0;

  nlohmann::ordered_json to_json() const;
};

// Throws ConfigError on unknown suite/model or on a suite/model mismatch
// (e.g. curvature-theorem suites on a model without a mixed 3-structure).
RunReport run_suite(const SuiteSpec& spec);

// format is one of "json", "csv", "text"; throws ConfigError otherwise.
std::string emit_report(const RunReport& r, const std::string& format);

// sorted (id, description) pairs
std::vector<std::pair<std::string, std::string>> suite_registry();

std::string list_models_text();
std::string list_suites_text();

}  // namespace mixed3geo
