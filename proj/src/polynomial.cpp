#include "knotcalc/polynomial.hpp"

#include <algorithm>

#include "knotcalc/errors.hpp"

namespace knotcalc {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const Int& c, std::size_t e) {
  std::vector<Int> v(e + 1);
  v[e] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Int g = content();
  if (leading() < 0) g = -g;
  std::vector<Int> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Int> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reciprocal() const {
  std::vector<Int> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(v));
}

Int IntPoly::evaluate(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::size_t IntPoly::low_order() const {
  std::size_t e = 0;
  while (e < coeffs_.size() && coeffs_[e] == 0) ++e;
  return e == coeffs_.size() ? 0 : e;
}

IntPoly IntPoly::shift_down(std::size_t e) const {
  if (e >= coeffs_.size()) return {};
  return IntPoly(std::vector<Int>(coeffs_.begin() + static_cast<std::ptrdiff_t>(e), coeffs_.end()));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Int mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i > 0 && mag != 1) out += "*";
    if (i == 1) out += "t";
    if (i > 1) out += "t^" + std::to_string(i);
  }
  return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<Int> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const Int& c, const IntPoly& a) {
  std::vector<Int> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * a.coeffs_[i];
  return IntPoly(std::move(v));
}

std::pair<IntPoly, bool> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ConstraintError("division by the zero polynomial");
  if (a.is_zero()) return {IntPoly{}, true};
  if (a.degree() < b.degree()) return {IntPoly{}, false};
  std::vector<Int> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Int> quo(rem.size() - db);
  Int q, r;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), bc[db].get_mpz_t());
    if (r != 0) return {IntPoly{}, false};
    quo[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[i - db + j].get_mpz_t(), q.get_mpz_t(), bc[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) return {IntPoly{}, false};
  }
  return {IntPoly(std::move(quo)), true};
}

namespace {

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const Int& lb = bc[db];
  for (std::size_t i = rem.size(); i-- > db;) {
    Int lead = rem[i];
    for (auto& c : rem) c *= lb;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[i - db + j].get_mpz_t(), lead.get_mpz_t(), bc[j].get_mpz_t());
  }
  rem.resize(db);
  return IntPoly(std::move(rem));
}

}  // namespace

IntPoly gcd(IntPoly a, IntPoly b) {
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntPoly monomialize(const SymPoly& f) {
  const auto d = static_cast<std::size_t>(f.degree());
  std::vector<Int> v(2 * d + 1);
  v[d] = f.a0();
  for (const auto& [i, c] : f.coefficients()) {
    v[d + static_cast<std::size_t>(i)] = c;
    v[d - static_cast<std::size_t>(i)] = c;
  }
  return IntPoly(std::move(v));
}

SymPoly symmetrize(const IntPoly& p) {
  if (p.is_zero()) return {};
  IntPoly q = p.shift_down(p.low_order());
  if (q.degree() % 2 != 0 || q.reciprocal() != q) {
    throw InternalError("polynomial " + p.to_string() + " is not symmetric up to a power of t");
  }
  const auto d = static_cast<std::size_t>(q.degree() / 2);
  SymPoly::CoefficientMap coeffs;
  for (std::size_t i = 1; i <= d; ++i) coeffs.emplace(static_cast<SymPoly::Index>(i), q.coefficient(d + i));
  return SymPoly(q.coefficient(d), coeffs);
}

}  // namespace knotcalc
