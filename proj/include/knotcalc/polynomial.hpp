#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotcalc/integer.hpp"
#include "knotcalc/sympoly.hpp"

namespace knotcalc {

/// Dense polynomial in Z[t], coefficients stored from t^0 upwards. The zero
/// polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);

  /// c * t^e
  static IntPoly monomial(const Int& c, std::size_t e);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Int>& coefficients() const noexcept { return coeffs_; }
  Int coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  const Int& leading() const { return coeffs_.back(); }

  Int content() const;
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  /// t^deg p(1/t)
  IntPoly reciprocal() const;
  Int evaluate(const Int& x) const;
  /// Largest e with t^e | p (0 for the zero polynomial).
  std::size_t low_order() const;
  IntPoly shift_down(std::size_t e) const;

  std::string to_string() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Int& c, const IntPoly& a);
  friend IntPoly operator-(const IntPoly& a);

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// Division over Z. `second` is false when b does not divide a in Z[t].
std::pair<IntPoly, bool> divide_exact(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (zero if both are zero).
IntPoly gcd(IntPoly a, IntPoly b);

/// t^{deg f} f(t) for a symmetric Laurent polynomial f.
IntPoly monomialize(const SymPoly& f);

/// Inverse of monomialize up to a power of t: strips t^e factors, checks the
/// result is a palindrome of even degree, and re-centres it. Throws
/// InternalError when the polynomial is not symmetric.
SymPoly symmetrize(const IntPoly& p);

}  // namespace knotcalc
