#include "knotcalc/lattice.hpp"

#include <limits>

#include "knotcalc/errors.hpp"
#include "knotcalc/invariants.hpp"
#include "knotcalc/kernels/box_search.hpp"
#include "text_cursor.hpp"

namespace knotcalc {

IntLattice::IntLattice(std::vector<std::vector<Int>> rows) : n_(rows.size()) {
  entries_.reserve(n_ * n_);
  for (auto& row : rows) {
    if (row.size() != n_) throw ConstraintError("lattice matrix is not square");
    for (auto& v : row) entries_.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (at(i, j) != at(j, i)) {
        throw ConstraintError("lattice matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

IntLattice IntLattice::diagonal(const std::vector<Int>& entries) {
  std::vector<std::vector<Int>> rows(entries.size(), std::vector<Int>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) rows[i][i] = entries[i];
  return IntLattice(std::move(rows));
}

IntLattice IntLattice::negative_e8() {
  // Dynkin diagram: chain 0-1-2-3-4-5-6, node 7 attached to node 4.
  std::vector<std::vector<Int>> rows(8, std::vector<Int>(8));
  auto link = [&](std::size_t a, std::size_t b) { rows[a][b] = rows[b][a] = 1; };
  for (std::size_t i = 0; i < 8; ++i) rows[i][i] = -2;
  for (std::size_t i = 0; i + 1 < 7; ++i) link(i, i + 1);
  link(4, 7);
  return IntLattice(std::move(rows));
}

IntLattice IntLattice::direct_sum(const IntLattice& a, const IntLattice& b) {
  const std::size_t n = a.rank() + b.rank();
  std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) rows[i][j] = a.at(i, j);
  }
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t j = 0; j < b.rank(); ++j) rows[a.rank() + i][a.rank() + j] = b.at(i, j);
  }
  return IntLattice(std::move(rows));
}

IntLattice IntLattice::repeat(const IntLattice& block, std::size_t copies) {
  IntLattice out;
  for (std::size_t i = 0; i < copies; ++i) out = direct_sum(out, block);
  return out;
}

IntLattice IntLattice::parse(std::string_view text) {
  detail::TextCursor cur(text);
  std::vector<std::vector<Int>> rows;
  if (cur.consume('[')) {
    if (!cur.consume(']')) {
      do {
        cur.expect('[');
        std::vector<Int> row{cur.read_signed()};
        while (cur.consume(',')) row.push_back(cur.read_signed());
        cur.expect(']');
        rows.push_back(std::move(row));
      } while (cur.consume(','));
      cur.expect(']');
    }
  } else {
    const std::size_t at = cur.offset();
    Int n = cur.read_unsigned();
    if (!n.fits_ulong_p() || n > 4096) throw ParseError(at, "lattice rank out of range");
    const std::size_t rank = n.get_ui();
    rows.assign(rank, std::vector<Int>(rank));
    for (auto& row : rows) {
      for (auto& v : row) v = cur.read_signed();
    }
  }
  if (!cur.at_end()) cur.fail("trailing input after matrix");
  return IntLattice(std::move(rows));
}

Int IntLattice::determinant() const {
  if (n_ == 0) return 1;
  // Bareiss fraction-free elimination.
  std::vector<Int> a = entries_;
  auto m = [&](std::size_t i, std::size_t j) -> Int& { return a[i * n_ + j]; };
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n_ && m(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (std::size_t j = 0; j < n_; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n_ - 1, n_ - 1);
}

Int IntLattice::form(std::span<const Int> x, std::span<const Int> y) const {
  if (x.size() != n_ || y.size() != n_) throw ConstraintError("vector length does not match lattice rank");
  Int sum = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < n_; ++j) row += at(i, j) * y[j];
    sum += x[i] * row;
  }
  return sum;
}

std::string IntLattice::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ",";
      out += at(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::NegativeDefinite:
      return "NegativeDefinite";
    case Definiteness::PositiveDefinite:
      return "PositiveDefinite";
    case Definiteness::Indefinite:
      return "Indefinite";
    case Definiteness::Degenerate:
      return "Degenerate";
  }
  return "Degenerate";
}

namespace {

// Counts (positive, negative, zero) diagonal entries after congruence
// diagonalization over Q.
struct RawInertia {
  std::size_t pos = 0, neg = 0, zero = 0;
};

RawInertia inertia_of(const IntLattice& L) {
  const std::size_t n = L.rank();
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = L.at(i, j);
  }
  auto m = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };
  auto swap_index = [&](std::size_t p, std::size_t q) {
    for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(q, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(m(i, p), m(i, q));
  };

  RawInertia out;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, p) == 0) ++p;
      if (p < n) {
        swap_index(k, p);
      } else {
        p = k + 1;
        while (p < n && m(k, p) == 0) ++p;
        if (p == n) {
          ++out.zero;
          continue;
        }
        // e_k <- e_k + e_p turns the pivot into 2 m(k,p) != 0.
        for (std::size_t j = 0; j < n; ++j) m(k, j) += m(p, j);
        for (std::size_t i = 0; i < n; ++i) m(i, k) += m(i, p);
      }
    }
    const Rational pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) m(i, k) = m(k, i) = 0;
    // Re-symmetrize the trailing block; the updates above only touched rows.
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) m(j, i) = m(i, j);
    }
    if (pivot > 0) {
      ++out.pos;
    } else {
      ++out.neg;
    }
  }
  return out;
}

}  // namespace

Definiteness definiteness(const IntLattice& L) {
  if (L.rank() == 0) return Definiteness::NegativeDefinite;
  if (L.determinant() == 0) return Definiteness::Degenerate;
  const RawInertia in = inertia_of(L);
  if (in.neg == L.rank()) return Definiteness::NegativeDefinite;
  if (in.pos == L.rank()) return Definiteness::PositiveDefinite;
  return Definiteness::Indefinite;
}

Inertia signature(const IntLattice& L) {
  if (L.determinant() == 0) throw ConstraintError("signature of a degenerate form");
  const RawInertia in = inertia_of(L);
  if (in.zero != 0) throw InternalError("nonsingular form diagonalized with a zero pivot");
  return {in.pos, in.neg, static_cast<std::int64_t>(in.pos) - static_cast<std::int64_t>(in.neg)};
}

bool is_even(const IntLattice& L) {
  for (std::size_t i = 0; i < L.rank(); ++i) {
    if (!mpz_even_p(L.at(i, i).get_mpz_t())) return false;
  }
  return true;
}

bool is_characteristic(const IntLattice& L, std::span<const Int> v) {
  if (v.size() != L.rank()) throw ConstraintError("vector length does not match lattice rank");
  for (std::size_t i = 0; i < L.rank(); ++i) {
    Int row = 0;
    for (std::size_t j = 0; j < L.rank(); ++j) row += L.at(i, j) * v[j];
    if (!mpz_even_p(Int(row - L.at(i, i)).get_mpz_t())) return false;
  }
  return true;
}

namespace {

// Solutions of (L mod 2) v = diag(L) mod 2, as one particular solution plus
// a nullspace basis, each a bitmask over coordinates.
struct ParityClasses {
  std::uint64_t particular = 0;
  std::vector<std::uint64_t> kernel;
};

ParityClasses characteristic_parities(const IntLattice& L) {
  const std::size_t n = L.rank();
  std::vector<std::uint64_t> rows(n);
  std::vector<int> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (mpz_odd_p(L.at(i, j).get_mpz_t())) rows[i] |= std::uint64_t{1} << j;
    }
    rhs[i] = mpz_odd_p(L.at(i, i).get_mpz_t()) ? 1 : 0;
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && !((rows[p] >> c) & 1)) ++p;
    if (p == n) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != r && ((rows[i] >> c) & 1)) {
        rows[i] ^= rows[r];
        rhs[i] ^= rhs[r];
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i) {
    if (rhs[i]) throw InternalError("no characteristic vector exists");
  }
  ParityClasses out;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < r; ++i) {
    is_pivot[pivot_col[i]] = true;
    if (rhs[i]) out.particular |= std::uint64_t{1} << pivot_col[i];
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (std::size_t i = 0; i < r; ++i) {
      if ((rows[i] >> f) & 1) v |= std::uint64_t{1} << pivot_col[i];
    }
    out.kernel.push_back(v);
  }
  return out;
}

}  // namespace

DBound os_d_lower_bound(const IntLattice& L, const BoundOptions& options) {
  const std::size_t n = L.rank();
  if (options.radius < 1) throw ConstraintError("search radius must be positive");
  if (n > options.max_rank || n > 63) {
    throw ConstraintError("rank " + std::to_string(n) + " exceeds the enumeration cap " +
                          std::to_string(options.max_rank));
  }
  if (definiteness(L) != Definiteness::NegativeDefinite) {
    throw ConstraintError("the d-invariant bound needs a negative definite form");
  }
  DBound out;
  if (n == 0) {
    out.bound = 0;
    out.best_square = 0;
    out.attained_inside = true;
    out.vectors_checked = 1;
    return out;
  }

  std::vector<std::int64_t> dense(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Int row_abs = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!L.at(i, j).fits_slong_p()) throw ConstraintError("matrix entries too large to enumerate");
      dense[i * n + j] = L.at(i, j).get_si();
      row_abs += abs(L.at(i, j));
    }
    if (row_abs * options.radius >= Int(1) << 30) throw ConstraintError("matrix entries too large to enumerate");
  }

  const ParityClasses classes = characteristic_parities(L);
  const std::int32_t R = options.radius;
  bool have_best = false;
  std::int64_t best = 0;
  std::vector<std::int32_t> argmax;
  bool inside = false;
  std::uint64_t visited = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << classes.kernel.size()); ++mask) {
    std::uint64_t parity = classes.particular;
    for (std::size_t b = 0; b < classes.kernel.size(); ++b) {
      if ((mask >> b) & 1) parity ^= classes.kernel[b];
    }
    std::vector<kernels::Progression> axes(n);
    bool empty = false;
    for (std::size_t i = 0; i < n; ++i) {
      const std::int32_t want = static_cast<std::int32_t>((parity >> i) & 1);
      const std::int32_t first = ((R % 2) == want) ? -R : -R + 1;
      if (first > R) {
        empty = true;
        break;
      }
      axes[i] = {first, 2, (R - first) / 2 + 1};
    }
    if (empty) continue;
    const auto result = kernels::box_search(kernels::make_problem(n, dense, std::move(axes), R));
    visited += result.visited;
    if (!have_best || result.best > best) {
      have_best = true;
      best = result.best;
      argmax = result.argmax;
      inside = result.inside;
    } else if (result.best == best) {
      inside = inside || result.inside;
    }
  }
  if (!have_best) throw ConstraintError("no characteristic vector inside the search box");

  out.best_square = to_int(best);
  out.bound = Rational(out.best_square + static_cast<unsigned long>(n), 4);
  out.bound.canonicalize();
  out.maximizer.reserve(n);
  for (std::int32_t v : argmax) out.maximizer.push_back(to_int(v));
  out.attained_inside = inside;
  out.vectors_checked = visited;
  return out;
}

Theorem1Certificate theorem1_certificate(std::int64_t k, int sign) {
  if (k < 1) throw ConstraintError("certificate needs k >= 1");
  if (sign != 1 && sign != -1) throw ConstraintError("certificate sign must be +1 or -1");

  // Upper side: -S^3_1(K(2,4k+-1)) bounds an even negative definite form of
  // rank 8k, the k-fold sum of -E8. Zero is characteristic, so
  // 4 d(-Y) >= 0 + 8k and d1 = -d(-Y) <= -2k.
  static const IntLattice block = IntLattice::negative_e8();
  static const bool block_ok = is_even(block) && definiteness(block) == Definiteness::NegativeDefinite &&
                               block.rank() == 8;
  if (!block_ok) throw InternalError("-E8 block failed its evenness/definiteness check");
  const std::vector<Int> zero(block.rank());
  if (!is_characteristic(block, zero)) throw InternalError("zero is not characteristic in -E8");
  const Int rank = 8 * to_int(k);
  Rational d_minus_y(block.form(zero, zero) * to_int(k) + rank, 4);
  d_minus_y.canonicalize();
  if (d_minus_y.get_den() != 1) throw InternalError("upper certificate is not integral");
  const Int upper = -d_minus_y.get_num();

  // Lower side: the cobordism form is diag(-1,...,-1) and (1,...,1) is
  // characteristic with square -m, so 4 d1(K(2,q)) - 4 d1(T(2,q)) >= 0.
  constexpr std::size_t m = 4;
  const IntLattice cobordism = IntLattice::diagonal(std::vector<Int>(m, Int(-1)));
  const std::vector<Int> ones(m, Int(1));
  if (!is_characteristic(cobordism, ones)) throw InternalError("(1,...,1) is not characteristic in diag(-1)");
  Rational gap(cobordism.form(ones, ones) + static_cast<unsigned long>(m), 4);
  gap.canonicalize();
  if (gap.get_den() != 1) throw InternalError("lower certificate is not integral");
  const Int lower = d1_torus_two_strand(4 * k + sign).integer() + gap.get_num();

  return {upper, lower};
}

}  // namespace knotcalc
