#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "knotcalc/knots.hpp"
#include "knotcalc/sympoly.hpp"

namespace knotcalc::verify {

/// Seed used by every randomized check unless overridden.
inline constexpr std::uint64_t kDefaultSeed = 0x6b6e6f7463616c63ULL;

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string provenance;
  /// Case count on success, smallest counterexample on failure.
  std::string detail;

  /// "ok   id" or "FAIL id [provenance]: detail"
  std::string render() const;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  /// Sorted by id.
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  bool ok() const { return passed() == checks.size(); }
};

/// sympoly, prop-prop, casson, witness, lattice, all.
const std::vector<std::string_view>& suite_names();

/// Runs one suite. Unknown names throw ConstraintError.
SuiteReport run_suite(std::string_view name, std::uint64_t seed = kDefaultSeed);

/// Random symmetric polynomial of degree <= max_degree, coefficients in
/// [-bound, bound]. With `unit_at_one` the constant term is chosen so f(1) = 1.
SymPoly random_sympoly(std::mt19937_64& rng, int max_degree, int bound, bool unit_at_one);

/// Random constructible knot expression of nesting depth <= depth.
KnotExpr random_knot(std::mt19937_64& rng, int depth);

}  // namespace knotcalc::verify
