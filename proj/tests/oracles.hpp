#pragma once

// Slow, independent reference implementations used only by the tests.

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "knotcalc/integer.hpp"
#include "knotcalc/lattice.hpp"
#include "knotcalc/polynomial.hpp"
#include "knotcalc/sympoly.hpp"

namespace oracle {

using knotcalc::Int;
using knotcalc::IntLattice;
using knotcalc::IntPoly;
using knotcalc::SymPoly;

/// Laurent polynomial as exponent -> coefficient, zeros removed.
using Laurent = std::map<std::int64_t, Int>;

inline Laurent expand(const SymPoly& f) {
  Laurent out;
  if (f.a0() != 0) out[0] = f.a0();
  for (const auto& [i, a] : f.coefficients()) {
    out[i] += a;
    out[-i] += a;
  }
  return out;
}

inline Laurent product(const Laurent& f, const Laurent& g) {
  Laurent out;
  for (const auto& [i, a] : f) {
    for (const auto& [j, b] : g) out[i + j] += a * b;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Inverse of expand; nullopt when the Laurent polynomial is not symmetric.
inline std::optional<SymPoly> collapse(const Laurent& f) {
  SymPoly::CoefficientMap coeffs;
  Int a0 = 0;
  for (const auto& [e, c] : f) {
    auto mirror = f.find(-e);
    if (mirror == f.end() || mirror->second != c) return std::nullopt;
    if (e == 0) a0 = c;
    if (e > 0) coeffs[e] = c;
  }
  return SymPoly(a0, coeffs);
}

inline SymPoly naive_mul(const SymPoly& f, const SymPoly& g) { return *collapse(product(expand(f), expand(g))); }

/// t0 straight from its definition on the Laurent form: sum over e > 0 of e * coeff.
inline Int naive_t0(const SymPoly& f) {
  Int s = 0;
  for (const auto& [e, c] : expand(f)) {
    if (e > 0) s += e * c;
  }
  return s;
}

/// Numeric f''(1) for a Laurent polynomial: sum e(e-1) c.
inline Int naive_second_derivative_at_one(const SymPoly& f) {
  Int s = 0;
  for (const auto& [e, c] : expand(f)) s += Int(e) * Int(e - 1) * c;
  return s;
}

/// Determinant by cofactor expansion along the first row.
inline Int cofactor_det(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(std::move(row));
    }
    const Int term = m[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : Int(-term);
  }
  return det;
}

inline std::vector<std::vector<Int>> rows_of(const IntLattice& L, std::size_t k) {
  std::vector<std::vector<Int>> out(k, std::vector<Int>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out[i][j] = L.at(i, j);
  }
  return out;
}

/// Sylvester's criterion: negative definite iff (-1)^k D_k > 0 for every
/// leading principal minor D_k.
inline bool sylvester_negative_definite(const IntLattice& L) {
  for (std::size_t k = 1; k <= L.rank(); ++k) {
    const Int d = cofactor_det(rows_of(L, k));
    if ((k % 2 == 1 ? Int(-d) : d) <= 0) return false;
  }
  return true;
}

/// (positive, negative) eigenvalue counts in floating point; only for small,
/// well-conditioned nonsingular test matrices.
inline std::pair<std::size_t, std::size_t> eigen_inertia(const IntLattice& L) {
  const auto n = static_cast<Eigen::Index>(L.rank());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = L.at(i, j).get_d();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  std::size_t pos = 0, neg = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (solver.eigenvalues()(i) > 1e-9) ++pos;
    if (solver.eigenvalues()(i) < -1e-9) ++neg;
  }
  return {pos, neg};
}

/// Max of x^T L x over characteristic x in [-r, r]^n by full enumeration,
/// testing the characteristic condition straight from its definition.
inline std::optional<Int> brute_best_characteristic_square(const IntLattice& L, int r) {
  const std::size_t n = L.rank();
  std::vector<Int> x(n, Int(-r));
  std::optional<Int> best;
  while (true) {
    if (knotcalc::is_characteristic(L, x)) {
      const Int q = L.form(x, x);
      if (!best || q > *best) best = q;
    }
    std::size_t i = 0;
    while (i < n && x[i] == r) x[i++] = -r;
    if (i == n) break;
    x[i] += 1;
  }
  return best;
}

/// Every divisor (positive and negative) of a nonzero integer of modest size.
inline std::vector<Int> divisors(const Int& v) {
  std::vector<Int> out;
  const Int a = abs(v);
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      out.push_back(-d);
      if (d * d != a) {
        out.push_back(a / d);
        out.push_back(-(a / d));
      }
    }
  }
  return out;
}

/// Kronecker's method: some factor of degree 1..deg/2 exists iff p is
/// reducible (p primitive, deg >= 2). Interpolates candidate factors through
/// divisors of p at the points 0, 1, -1, 2, -2, ...
inline bool kronecker_reducible(const IntPoly& p) {
  const int deg = p.degree();
  if (deg <= 1) return false;
  std::vector<Int> points;
  for (int i = 0; static_cast<int>(points.size()) <= deg / 2; ++i) {
    const Int x = (i % 2 == 0) ? Int(i / 2) : Int(-(i / 2 + 1));
    if (p.evaluate(x) == 0) return true;  // linear factor t - x
    points.push_back(x);
  }
  for (int d = 1; d <= deg / 2; ++d) {
    std::vector<std::vector<Int>> choices;
    for (int i = 0; i <= d; ++i) choices.push_back(divisors(p.evaluate(points[i])));
    std::vector<std::size_t> idx(d + 1, 0);
    while (true) {
      // Lagrange interpolation over Q through (points[i], choices[i][idx[i]]).
      std::vector<knotcalc::Rational> coeffs(d + 1, knotcalc::Rational(0));
      for (int i = 0; i <= d; ++i) {
        std::vector<knotcalc::Rational> basis{knotcalc::Rational(1)};
        knotcalc::Rational denom = 1;
        for (int j = 0; j <= d; ++j) {
          if (j == i) continue;
          std::vector<knotcalc::Rational> next(basis.size() + 1, knotcalc::Rational(0));
          for (std::size_t k = 0; k < basis.size(); ++k) {
            next[k + 1] += basis[k];
            next[k] -= basis[k] * points[j];
          }
          basis = std::move(next);
          denom *= knotcalc::Rational(points[i] - points[j]);
        }
        for (int k = 0; k <= d; ++k) coeffs[k] += basis[k] * choices[i][idx[i]] / denom;
      }
      bool integral = coeffs[d] != 0;
      std::vector<Int> ints;
      for (auto& c : coeffs) {
        c.canonicalize();
        if (c.get_den() != 1) integral = false;
        ints.push_back(c.get_num());
      }
      if (integral && knotcalc::divide_exact(p, IntPoly(ints)).second) return true;
      int i = 0;
      while (i <= d && ++idx[i] == choices[i].size()) idx[i++] = 0;
      if (i > d) break;
    }
  }
  return false;
}

/// Exhaustive search for f = +-g(t) g(1/t). Coefficients of g are bounded by
/// sqrt(|a0(f)|) because a0 of g(t) g(1/t) is the sum of their squares.
inline bool brute_fox_milnor(const SymPoly& f) {
  const std::int64_t deg = f.degree();
  const Int a0 = abs(f.a0());
  Int bound_z = sqrt(a0);
  const int bound = static_cast<int>(bound_z.get_si());
  std::vector<int> g(deg + 1, -bound);
  while (true) {
    SymPoly::CoefficientMap coeffs;
    Int c0 = 0;
    for (std::int64_t s = 0; s <= deg; ++s) {
      Int v = 0;
      for (std::int64_t i = 0; i + s <= deg; ++i) v += g[i] * g[i + s];
      if (s == 0) {
        c0 = v;
      } else if (v != 0) {
        coeffs[s] = v;
      }
    }
    const SymPoly h(c0, coeffs);
    if (h == f || knotcalc::negate(h) == f) return true;
    std::size_t i = 0;
    while (i < g.size() && g[i] == bound) g[i++] = -bound;
    if (i == g.size()) break;
    ++g[i];
  }
  return false;
}

}  // namespace oracle
