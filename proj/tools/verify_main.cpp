// Command-line front end: runs named verification suites over registered
// models and emits JSON/CSV/text reports. Exit codes: 0 all assertions pass,
// 1 any assertion fails, 2 configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mixed3geo/suites.hpp"

namespace {

using mixed3geo::ConfigError;
using mixed3geo::RunReport;
using mixed3geo::SuiteSpec;

// Which suites make sense on which model families; used only to build the
// default cross product. Explicit --suite/--model pairs are passed through
// and mismatches surface as ConfigError (exit 2).
bool applicable(const std::string& suite, const std::string& model) {
  const bool product = model.rfind("product:", 0) == 0;
  const bool hyper = model.rfind("pseudo-sphere:", 0) == 0;
  const bool flat_pq = model.rfind("flat-pq:", 0) == 0;
  const bool flat_mixed = model.rfind("flat-mixed:", 0) == 0;
  if (suite == "axioms" || suite == "fd-crosscheck") return true;
  if (suite == "domega" || suite == "nijenhuis") return product;
  if (suite == "contact-class" || suite == "kashiwada")
    return hyper || flat_mixed;
  (void)flat_pq;
  return hyper;  // curvature-theorem suites
}

std::map<std::string, double> parse_tols(const std::vector<std::string>& kvs) {
  std::map<std::string, double> out;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--tol expects KEY=VAL, got: " + kv);
    try {
      out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw ConfigError("--tol value is not a number: " + kv);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verifier for mixed metric 3-structure models"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run verification suites");
  std::vector<std::string> suites, models, tol_kvs;
  int points = 32, vectors = 8;
  std::uint64_t seed = 42;
  bool seed_given = false;
  std::string format = "text", out_file;
  run->add_option("--suite", suites, "suite id (repeatable; default: all applicable)");
  run->add_option("--model", models, "model key (repeatable; default: shipped set)");
  run->add_option("--points", points, "sampled points per chart")->capture_default_str();
  run->add_option("--vectors", vectors, "random vector tuples per point")->capture_default_str();
  run->add_option("--seed", seed, "sampling seed")->capture_default_str()
      ->each([&](const std::string&) { seed_given = true; });
  run->add_option("--tol", tol_kvs, "tolerance override KEY=VAL (repeatable)");
  run->add_option("--format", format, "report format: text, json, csv")->capture_default_str();
  run->add_option("--out", out_file, "write the report to a file instead of stdout");

  auto* lm = app.add_subcommand("list-models", "print registered model keys");
  auto* ls = app.add_subcommand("list-suites", "print registered suite ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (lm->parsed()) {
      std::cout << mixed3geo::list_models_text();
      return 0;
    }
    if (ls->parsed()) {
      std::cout << mixed3geo::list_suites_text();
      return 0;
    }

    if (!seed_given) {
      if (const char* env = std::getenv("MIXED3GEO_SEED")) seed = std::stoull(env);
    }
    const auto tols = parse_tols(tol_kvs);

    const bool explicit_pairing = !suites.empty() && !models.empty();
    if (models.empty())
      models = {"pseudo-sphere:1:+1", "pseudo-sphere:1:-1",
                "product:pseudo-sphere:1:+1"};
    if (suites.empty())
      for (const auto& [id, desc] : mixed3geo::suite_registry()) suites.push_back(id);

    std::vector<RunReport> reports;
    for (const auto& model : models)
      for (const auto& suite : suites) {
        if (!explicit_pairing && !applicable(suite, model)) continue;
        SuiteSpec spec;
        spec.suite_id = suite;
        spec.model_key = model;
        spec.points = points;
        spec.vectors_per_point = vectors;
        spec.seed = seed;
        spec.tol_overrides = tols;
        reports.push_back(mixed3geo::run_suite(spec));
      }
    if (reports.empty()) throw ConfigError("no (suite, model) pairs to run");

    std::ostringstream os;
    if (format == "json" && reports.size() > 1) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) arr.push_back(r.to_json());
      os << arr.dump(2) << "\n";
    } else {
      for (const auto& r : reports) os << mixed3geo::emit_report(r, format);
    }

    if (out_file.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream f(out_file);
      if (!f) throw ConfigError("cannot open output file: " + out_file);
      f << os.str();
    }

    for (const auto& r : reports)
      if (!r.pass) return 1;
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mixed3geo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
