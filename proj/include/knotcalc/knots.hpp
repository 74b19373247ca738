#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotcalc/integer.hpp"
#include "knotcalc/sympoly.hpp"

namespace knotcalc {

/// Immutable knot expression tree:
///
///   expr := "unknot" | "torus(" p "," q ")" | "K(" n ")"
///         | "cable2(" q ";" expr ")" | "sum(" expr ("," expr)+ ")"
///         | "mirror(" expr ")"
///
/// K(n) is the twist-knot family with Alexander polynomial n t - (2n-1) + n/t.
/// Nodes share structure; copying is cheap.
class KnotExpr {
 public:
  enum class Kind { Unknot, Torus, FamilyK, Cable2, Sum, Mirror };

  /// Default-constructed expression is the unknot.
  KnotExpr();

  static KnotExpr unknot();
  /// Requires |p|, |q| >= 2 and gcd(p, q) = 1. Exactly one negative parameter
  /// yields mirror(torus(|p|,|q|)); two negative parameters are rejected.
  static KnotExpr torus(std::int64_t p, std::int64_t q);
  static KnotExpr family_k(std::int64_t n);
  /// The (2,q)-cable of `companion`; q must be odd.
  static KnotExpr cable2(std::int64_t q, KnotExpr companion);
  /// Connected sum. A single part is returned unchanged; no parts is an error.
  static KnotExpr sum(std::vector<KnotExpr> parts);
  static KnotExpr mirror(KnotExpr inner);

  /// K^{m,n} = K(n) # K(n+1) # ... # K(n+m-1), m >= 1.
  static KnotExpr family_sum(std::int64_t m, std::int64_t n);

  Kind kind() const noexcept;
  /// Torus p, q; FamilyK n (as p()); Cable2 q (as q()).
  std::int64_t p() const noexcept;
  std::int64_t q() const noexcept;
  std::int64_t n() const noexcept { return p(); }
  /// Cable2 companion or Mirror inner.
  const KnotExpr& child() const;
  const std::vector<KnotExpr>& parts() const;

  std::string to_string() const;
  static KnotExpr parse(std::string_view text);

  friend bool operator==(const KnotExpr& a, const KnotExpr& b);

 private:
  struct Node;
  explicit KnotExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Normalized Alexander polynomial (symmetric, value 1 at t = 1).
SymPoly alexander(const KnotExpr& k);

/// Delta of T(2, 2r+1) from the alternating closed form, r >= 1.
SymPoly alexander_torus_two_strand(std::int64_t r);
/// Delta of T(p,q), p, q >= 2 coprime, from
/// (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)).
SymPoly alexander_torus_by_division(std::int64_t p, std::int64_t q);

/// Companion-level attributes; an empty optional means "unknown".
struct KnotAttributes {
  std::optional<Int> genus;
  std::optional<bool> is_negative;
  std::optional<bool> is_positive;
  std::optional<bool> bounds_nullhomologous_disk;
  std::optional<int> epsilon;
  std::optional<Int> tau;

  friend bool operator==(const KnotAttributes&, const KnotAttributes&) = default;
};

KnotAttributes attributes(const KnotExpr& k);

}  // namespace knotcalc
