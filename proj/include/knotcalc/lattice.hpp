#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "knotcalc/integer.hpp"

namespace knotcalc {

/// Symmetric integer matrix: the Gram matrix of an integral bilinear form in
/// a fixed basis. Symmetry is checked on construction.
class IntLattice {
 public:
  IntLattice() = default;
  explicit IntLattice(std::vector<std::vector<Int>> rows);

  static IntLattice diagonal(const std::vector<Int>& entries);
  /// Negated E8 Cartan matrix: even, unimodular, negative definite, rank 8.
  static IntLattice negative_e8();
  static IntLattice direct_sum(const IntLattice& a, const IntLattice& b);
  /// copies-fold direct sum of `block`.
  static IntLattice repeat(const IntLattice& block, std::size_t copies);

  /// Either inline "[[a,b],[b,c]]" or "n" followed by n rows of n integers.
  static IntLattice parse(std::string_view text);

  std::size_t rank() const noexcept { return n_; }
  const Int& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  Int determinant() const;
  /// x^T L y
  Int form(std::span<const Int> x, std::span<const Int> y) const;

  /// "[[a,b],[b,c]]"
  std::string to_string() const;

  friend bool operator==(const IntLattice&, const IntLattice&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Int> entries_;
};

enum class Definiteness { NegativeDefinite, PositiveDefinite, Indefinite, Degenerate };

std::string_view to_string(Definiteness d);

struct Inertia {
  std::size_t beta_plus = 0;
  std::size_t beta_minus = 0;
  std::int64_t sigma = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Degenerate iff det = 0; otherwise read off the inertia. The rank-0 form
/// counts as negative definite.
Definiteness definiteness(const IntLattice& L);

/// Exact inertia by rational congruence diagonalization. Throws
/// ConstraintError on degenerate forms.
Inertia signature(const IntLattice& L);

/// Every diagonal entry even, i.e. the zero vector is characteristic.
bool is_even(const IntLattice& L);

/// (L v)_i = L_ii mod 2 for every basis index i.
bool is_characteristic(const IntLattice& L, std::span<const Int> v);

struct BoundOptions {
  std::int32_t radius = 3;
  std::size_t max_rank = 12;
};

/// Outcome of the characteristic-vector search behind the d-invariant bound
/// Q(xi, xi) + rank <= 4 d(Y).
struct DBound {
  Rational bound;                 // max(Q(xi,xi) + n) / 4
  Int best_square;                // max Q(xi,xi)
  std::vector<Int> maximizer;     // first maximizer found
  bool attained_inside = false;   // some maximizer has every |xi_i| < radius
  std::uint64_t vectors_checked = 0;
};

/// Enumerates the characteristic vectors with coordinates in [-radius, radius]
/// and returns the best bound they give. L must be negative definite and of
/// rank at most options.max_rank.
DBound os_d_lower_bound(const IntLattice& L, const BoundOptions& options = {});

struct Theorem1Certificate {
  Int upper;
  Int lower;
};

/// Both sides of d1(K(2,4k+sign)) = -2k under the disk hypothesis: the upper
/// bound from an even negative definite rank-8k form with xi = 0, the lower
/// bound from diag(-1,...,-1) with xi = (1,...,1) plus d1(T(2,4k+sign)).
Theorem1Certificate theorem1_certificate(std::int64_t k, int sign);

}  // namespace knotcalc
