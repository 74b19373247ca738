#include "knotcalc/sympoly.hpp"

#include <cstdlib>
#include <vector>

#include "knotcalc/errors.hpp"
#include "text_cursor.hpp"

namespace knotcalc {

namespace {

SymPoly from_dense(std::vector<Int>& acc) {
  SymPoly::CoefficientMap coeffs;
  for (std::size_t i = 1; i < acc.size(); ++i) {
    if (acc[i] != 0) coeffs.emplace(static_cast<SymPoly::Index>(i), std::move(acc[i]));
  }
  return SymPoly(acc.empty() ? Int(0) : acc[0], coeffs);
}

void append_term(std::string& out, const Int& c, const std::string& var, bool first) {
  Int mag = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += (c < 0) ? " - " : " + ";
  }
  if (var.empty()) {
    out += mag.get_str();
  } else if (mag == 1) {
    out += var;
  } else {
    out += mag.get_str();
    out += "*";
    out += var;
  }
}

enum class Basis { T, Monomial };

// Reads a signed sum of terms. Returns exponent (monomial) or T-index (T
// basis) to coefficient; exponent 0 is the constant term.
std::map<std::int64_t, Int> read_terms(std::string_view text, Basis basis) {
  detail::TextCursor cur(text);
  if (cur.at_end()) cur.fail("empty polynomial");
  std::map<std::int64_t, Int> terms;
  bool first = true;
  while (!cur.at_end()) {
    bool negative = false;
    if (cur.consume('-')) {
      negative = true;
    } else if (!cur.consume('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    Int coef = 1;
    bool have_coef = false;
    bool have_star = false;
    if (cur.peek_digit()) {
      coef = cur.read_unsigned();
      have_coef = true;
      have_star = cur.consume('*');
    }
    std::int64_t key = 0;
    bool have_var = false;
    if (basis == Basis::T && cur.consume('T')) {
      std::size_t at = cur.offset();
      Int idx = cur.read_unsigned();
      if (idx < 1 || !idx.fits_slong_p()) throw ParseError(at, "T index must be a positive integer");
      key = idx.get_si();
      have_var = true;
    } else if (basis == Basis::Monomial && cur.consume('t')) {
      key = 1;
      if (cur.consume('^')) key = cur.read_int64();
      have_var = true;
    }
    if (!have_var && (!have_coef || have_star)) cur.fail("expected a term");
    terms[key] += negative ? Int(-coef) : coef;
    first = false;
  }
  return terms;
}

}  // namespace

SymPoly::SymPoly(Int a0, const CoefficientMap& coeffs) : a0_(std::move(a0)) {
  for (const auto& [i, c] : coeffs) {
    if (i < 1) throw ConstraintError("SymPoly basis index must be >= 1, got " + std::to_string(i));
    if (c != 0) coeffs_.emplace(i, c);
  }
}

SymPoly SymPoly::basis(Index i) { return SymPoly(Int(0), {{i, Int(1)}}); }

Int SymPoly::coefficient(Index i) const {
  if (i == 0) return a0_;
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Int(0) : it->second;
}

std::string SymPoly::to_tbasis_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  if (a0_ != 0) {
    append_term(out, a0_, "", true);
    first = false;
  }
  for (const auto& [i, c] : coeffs_) {
    append_term(out, c, "T" + std::to_string(i), first);
    first = false;
  }
  return out;
}

std::string SymPoly::to_monomial_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    append_term(out, it->second, it->first == 1 ? "t" : "t^" + std::to_string(it->first), first);
    first = false;
  }
  if (a0_ != 0) {
    append_term(out, a0_, "", first);
    first = false;
  }
  for (const auto& [i, c] : coeffs_) {
    append_term(out, c, i == 1 ? "t^-1" : "t^-" + std::to_string(i), first);
  }
  return out;
}

SymPoly SymPoly::parse_tbasis(std::string_view text) {
  auto terms = read_terms(text, Basis::T);
  Int a0 = terms[0];
  terms.erase(0);
  return SymPoly(a0, CoefficientMap(terms.begin(), terms.end()));
}

SymPoly SymPoly::parse_monomial(std::string_view text) {
  auto terms = read_terms(text, Basis::Monomial);
  CoefficientMap coeffs;
  for (const auto& [e, c] : terms) {
    if (e <= 0 || c == 0) continue;
    auto mirror = terms.find(-e);
    if (mirror == terms.end() || mirror->second != c) {
      throw ConstraintError("Laurent polynomial is not symmetric at t^" + std::to_string(e));
    }
    coeffs.emplace(e, c);
  }
  for (const auto& [e, c] : terms) {
    if (e < 0 && c != 0 && !coeffs.count(-e)) {
      throw ConstraintError("Laurent polynomial is not symmetric at t^" + std::to_string(e));
    }
  }
  return SymPoly(terms[0], coeffs);
}

SymPoly SymPoly::parse(std::string_view text) {
  return text.find('T') != std::string_view::npos ? parse_tbasis(text) : parse_monomial(text);
}

SymPoly add(const SymPoly& f, const SymPoly& g) {
  SymPoly::CoefficientMap coeffs = f.coefficients();
  for (const auto& [i, c] : g.coefficients()) coeffs[i] += c;
  return SymPoly(f.a0() + g.a0(), coeffs);
}

SymPoly negate(const SymPoly& f) { return scale(f, Int(-1)); }

SymPoly scale(const SymPoly& f, const Int& c) {
  SymPoly::CoefficientMap coeffs;
  for (const auto& [i, a] : f.coefficients()) coeffs.emplace(i, a * c);
  return SymPoly(f.a0() * c, coeffs);
}

SymPoly mul(const SymPoly& f, const SymPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  // Support lists with index 0 standing for the constant term.
  auto support = [](const SymPoly& p) {
    std::vector<std::pair<SymPoly::Index, const Int*>> s;
    if (p.a0() != 0) s.emplace_back(0, &p.a0());
    for (const auto& [i, c] : p.coefficients()) s.emplace_back(i, &c);
    return s;
  };
  const auto fs = support(f);
  const auto gs = support(g);
  std::vector<Int> acc(static_cast<std::size_t>(f.degree() + g.degree() + 1));
  Int prod;
  for (const auto& [i, a] : fs) {
    for (const auto& [k, b] : gs) {
      mpz_mul(prod.get_mpz_t(), a->get_mpz_t(), b->get_mpz_t());
      if (i == 0 || k == 0) {
        acc[static_cast<std::size_t>(i + k)] += prod;
        continue;
      }
      acc[static_cast<std::size_t>(i + k)] += prod;
      SymPoly::Index d = i > k ? i - k : k - i;
      if (d == 0) {
        mpz_addmul_ui(acc[0].get_mpz_t(), prod.get_mpz_t(), 2);
      } else {
        acc[static_cast<std::size_t>(d)] += prod;
      }
    }
  }
  return from_dense(acc);
}

SymPoly substitute_power(const SymPoly& f, std::int64_t p) {
  if (p < 1) throw ConstraintError("substitute_power needs p >= 1");
  SymPoly::CoefficientMap coeffs;
  for (const auto& [i, c] : f.coefficients()) coeffs.emplace(i * p, c);
  return SymPoly(f.a0(), coeffs);
}

Int eval_at_one(const SymPoly& f) {
  Int sum = f.a0();
  for (const auto& [i, c] : f.coefficients()) sum += 2 * c;
  return sum;
}

Int second_derivative_at_one(const SymPoly& f) {
  Int sum = 0;
  for (const auto& [i, c] : f.coefficients()) sum += 2 * to_int(i) * to_int(i) * c;
  return sum;
}

Int t0(const SymPoly& f) {
  Int sum = 0;
  for (const auto& [i, c] : f.coefficients()) sum += to_int(i) * c;
  return sum;
}

Int lemma3_t0_times_Tk(const SymPoly& f, std::int64_t k) {
  if (k < 1) throw ConstraintError("lemma3_t0_times_Tk needs k >= 1");
  if (eval_at_one(f) != 1) throw ConstraintError("lemma3_t0_times_Tk needs f(1) = 1");
  const Int kk = to_int(k);
  if (k >= f.degree()) return kk;
  Int sum = kk * f.a0();
  for (const auto& [i, c] : f.coefficients()) {
    sum += (i <= k ? 2 * kk : 2 * to_int(i)) * c;
  }
  return sum;
}

}  // namespace knotcalc
