#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "knotcalc/integer.hpp"

namespace knotcalc {

/// Integer symmetric Laurent polynomial f(t) = f(1/t), stored in the basis
/// T_i = t^i + t^-i as a0 + sum_{i>=1} a_i T_i.
///
/// The coefficient map never holds a zero entry and never holds index 0, so
/// structural equality is polynomial equality. Values are immutable once
/// built; every operation returns a fresh polynomial.
class SymPoly {
 public:
  using Index = std::int64_t;
  using CoefficientMap = std::map<Index, Int>;

  SymPoly() = default;
  explicit SymPoly(Int a0) : a0_(std::move(a0)) {}

  /// Builds a0 + sum a_i T_i. Zero entries are dropped; index < 1 throws.
  SymPoly(Int a0, const CoefficientMap& coeffs);

  /// T_i for i >= 1.
  static SymPoly basis(Index i);

  const Int& a0() const noexcept { return a0_; }
  /// a_i(f); index 0 gives a0.
  Int coefficient(Index i) const;
  const CoefficientMap& coefficients() const noexcept { return coeffs_; }
  Index degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
  bool is_zero() const noexcept { return a0_ == 0 && coeffs_.empty(); }

  /// "1 - T1 + T2"
  std::string to_tbasis_string() const;
  /// "t^2 - t + 1 - t^-1 + t^-2"
  std::string to_monomial_string() const;

  static SymPoly parse_tbasis(std::string_view text);
  /// Rejects text whose Laurent polynomial is not symmetric.
  static SymPoly parse_monomial(std::string_view text);
  /// Picks the T-basis reader if the text mentions `T`, the monomial one otherwise.
  static SymPoly parse(std::string_view text);

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  Int a0_;
  CoefficientMap coeffs_;
};

SymPoly add(const SymPoly& f, const SymPoly& g);
SymPoly negate(const SymPoly& f);
SymPoly scale(const SymPoly& f, const Int& c);
/// Product via T_i T_k = T_{i+k} + T_{|i-k|}, with T_0 = 2.
SymPoly mul(const SymPoly& f, const SymPoly& g);
/// f(t^p) for p >= 1.
SymPoly substitute_power(const SymPoly& f, std::int64_t p);

/// f(1) = a0 + 2 sum a_i.
Int eval_at_one(const SymPoly& f);
/// f''(1) = sum 2 i^2 a_i.
Int second_derivative_at_one(const SymPoly& f);
/// t0(f) = sum i a_i.
Int t0(const SymPoly& f);

/// Closed form for t0(f * T_k) when f(1) = 1 and k >= 1:
///   k                                                  if k >= deg f
///   k a0 + sum_{i<=k} 2k a_i + sum_{i>k} 2i a_i         otherwise
/// Throws ConstraintError if f(1) != 1 or k < 1.
Int lemma3_t0_times_Tk(const SymPoly& f, std::int64_t k);

inline SymPoly operator+(const SymPoly& f, const SymPoly& g) { return add(f, g); }
inline SymPoly operator-(const SymPoly& f) { return negate(f); }
inline SymPoly operator-(const SymPoly& f, const SymPoly& g) { return add(f, negate(g)); }
inline SymPoly operator*(const SymPoly& f, const SymPoly& g) { return mul(f, g); }

}  // namespace knotcalc
