#pragma once

#include <utility>
#include <vector>

#include "knotcalc/polynomial.hpp"

namespace knotcalc {

/// p = unit * prod factors[i].first ^ factors[i].second, where every factor
/// is primitive, irreducible over Z, and has positive leading coefficient.
/// Factors are sorted by (degree, coefficients).
struct Factorization {
  Int unit;
  std::vector<std::pair<IntPoly, int>> factors;
};

/// Complete factorization over Z (Zassenhaus: factor modulo a small prime,
/// Hensel-lift, recombine). Throws ConstraintError on the zero polynomial.
Factorization factor(const IntPoly& p);

}  // namespace knotcalc
