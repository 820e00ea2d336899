#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mixed3geo/suites.hpp"

using namespace mixed3geo;

namespace {

SuiteSpec spec_of(const std::string& suite, const std::string& model,
                  int points = 8, int vectors = 4) {
  SuiteSpec s;
  s.suite_id = suite;
  s.model_key = model;
  s.points = points;
  s.vectors_per_point = vectors;
  s.seed = 42;
  return s;
}

nlohmann::ordered_json without_timing(const RunReport& r) {
  auto j = r.to_json();
  j.erase("wall_ms");
  return j;
}

}  // namespace

TEST_CASE("unknown suite and model are config errors") {
  CHECK_THROWS_AS(run_suite(spec_of("bogus", "flat-pq:1")), ConfigError);
  CHECK_THROWS_AS(run_suite(spec_of("axioms", "bogus:1")), ConfigError);
}

TEST_CASE("curvature-theorem suite on a non-Sasakian model is a config error") {
  CHECK_THROWS_AS(run_suite(spec_of("einstein", "flat-pq:1")), ConfigError);
  CHECK_THROWS_AS(run_suite(spec_of("domega", "pseudo-sphere:1:+1")), ConfigError);
}

TEST_CASE("reports are byte-identical modulo the timing field") {
  auto a = run_suite(spec_of("lemma31", "pseudo-sphere:1:+1"));
  auto b = run_suite(spec_of("lemma31", "pseudo-sphere:1:+1"));
  CHECK(without_timing(a).dump() == without_timing(b).dump());
  auto c = run_suite(spec_of("lemma31", "pseudo-sphere:1:+1", 8, 5));
  CHECK(without_timing(a).dump() != without_timing(c).dump());
}

TEST_CASE("json report round-trips and matches the schema") {
  auto r = run_suite(spec_of("einstein", "pseudo-sphere:1:+1"));
  auto parsed = nlohmann::ordered_json::parse(emit_report(r, "json"));
  CHECK(parsed["suite"] == "einstein");
  CHECK(parsed["model"] == "pseudo-sphere:1:+1");
  CHECK(parsed["seed"] == 42);
  CHECK(parsed["points"] == 8);
  CHECK(parsed["pass"] == true);
  REQUIRE(parsed["assertions"].is_array());
  for (const auto& a : parsed["assertions"]) {
    CHECK(a.contains("id"));
    CHECK(a.contains("residual"));
    CHECK(a.contains("tol"));
    CHECK(a.contains("pass"));
    CHECK(a.contains("worst_point"));
  }
  CHECK(parsed.contains("wall_ms"));
  CHECK(parsed.dump() == r.to_json().dump());
}

TEST_CASE("csv has one row per assertion; unknown format rejected") {
  auto r = run_suite(spec_of("scalar", "pseudo-sphere:1:-1"));
  std::string csv = emit_report(r, "csv");
  const auto rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == 1 + static_cast<long>(r.assertions.size()));
  CHECK_THROWS_AS(emit_report(r, "yaml"), ConfigError);
}

TEST_CASE("tolerance overrides flip pass/fail") {
  auto strict = spec_of("einstein", "pseudo-sphere:1:+1");
  strict.tol_overrides["einstein-ricci-proportional"] = 1e-18;
  auto r = run_suite(strict);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.assertions.front().pass);
}

TEST_CASE("negative control: contact suites fail on the flat mixed model") {
  auto axioms = run_suite(spec_of("axioms", "flat-mixed:1"));
  CHECK(axioms.pass);
  auto contact = run_suite(spec_of("contact-class", "flat-mixed:1"));
  CHECK_FALSE(contact.pass);
  // the implication is vacuously true when the premise fails
  auto kash = run_suite(spec_of("kashiwada", "flat-mixed:1"));
  CHECK(kash.pass);
}

TEST_CASE("kashiwada on the hypersurface holds with a live premise") {
  auto r = run_suite(spec_of("kashiwada", "pseudo-sphere:1:+1"));
  CHECK(r.pass);
  REQUIRE_FALSE(r.notes.empty());
  CHECK(r.notes.front().find("holds") != std::string::npos);
}

TEST_CASE("every registered suite runs on its natural model") {
  for (const auto& [id, desc] : suite_registry()) {
    std::string model = "pseudo-sphere:1:+1";
    if (id == "domega" || id == "nijenhuis") model = "product:pseudo-sphere:1:+1";
    auto r = run_suite(spec_of(id, model, 4, 2));
    CHECK(r.pass);
  }
}

TEST_CASE("listing output is sorted and complete") {
  std::string suites = list_suites_text();
  CHECK(suites.find("kashiwada") != std::string::npos);
  std::string models = list_models_text();
  CHECK(models.find("pseudo-sphere:1:+1") != std::string::npos);
  auto reg = suite_registry();
  CHECK(std::is_sorted(reg.begin(), reg.end()));
  auto mreg = model_registry();
  CHECK(std::is_sorted(mreg.begin(), mreg.end()));
}
