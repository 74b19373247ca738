#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "knotcalc/errors.hpp"
#include "knotcalc/verify.hpp"

using namespace knotcalc;

TEST_CASE("suites pass, are sorted and deterministic") {
  for (std::string_view name : {"prop-prop", "casson", "witness", "lattice", "sympoly"}) {
    const verify::SuiteReport r = verify::run_suite(name);
    CHECK_MESSAGE(r.ok(), name);
    CHECK(std::is_sorted(r.checks.begin(), r.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
    for (const auto& c : r.checks) {
      CHECK_MESSAGE(c.passed, c.render());
      CHECK(!c.provenance.empty());
    }
  }
  CHECK(verify::run_suite("prop-prop").checks.size() == 22);
  const auto a = verify::run_suite("sympoly", 17);
  const auto b = verify::run_suite("sympoly", 17);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].detail == b.checks[i].detail);
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(verify::run_suite("unknown-suite"), ConstraintError); }

TEST_CASE("failure rendering names the provenance") {
  const verify::CheckResult c{"x.y", false, "Theorem 1 equality", "upper = -4, expected -2"};
  CHECK(c.render() == "FAIL x.y [Theorem 1 equality]: upper = -4, expected -2");
}
