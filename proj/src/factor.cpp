#include "knotcalc/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>

#include "knotcalc/errors.hpp"

namespace knotcalc {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over Z/p, p an odd prime below 2^31. Coefficients low to high,
// no trailing zeros.

using ZpPoly = std::vector<std::uint64_t>;

class Zp {
 public:
  explicit Zp(std::uint64_t p) : p_(p) {}

  std::uint64_t prime() const { return p_; }

  std::uint64_t mulm(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }

  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t result = 1, base = a % p_, e = p_ - 2;
    while (e) {
      if (e & 1) result = mulm(result, base);
      base = mulm(base, base);
      e >>= 1;
    }
    return result;
  }

  static void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  static int deg(const ZpPoly& a) { return static_cast<int>(a.size()) - 1; }

  ZpPoly reduce(const IntPoly& f) const {
    ZpPoly r(f.coefficients().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mpz_fdiv_ui(f.coefficients()[i].get_mpz_t(), p_);
    trim(r);
    return r;
  }

  ZpPoly sub(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t x = i < a.size() ? a[i] : 0;
      std::uint64_t y = i < b.size() ? b[i] : 0;
      r[i] = (x + p_ - y) % p_;
    }
    trim(r);
    return r;
  }

  ZpPoly mul(const ZpPoly& a, const ZpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    }
    trim(r);
    return r;
  }

  ZpPoly scale(const ZpPoly& a, std::uint64_t c) const {
    ZpPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulm(a[i], c);
    trim(r);
    return r;
  }

  ZpPoly monic(const ZpPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }

  // a = q b + r
  void divmod(const ZpPoly& a, const ZpPoly& b, ZpPoly& q, ZpPoly& r) const {
    r = a;
    q.clear();
    if (a.size() < b.size()) return;
    q.assign(a.size() - b.size() + 1, 0);
    const std::uint64_t lead_inv = inv(b.back());
    for (std::size_t i = r.size(); i-- >= b.size();) {
      std::uint64_t c = mulm(r[i], lead_inv);
      q[i - b.size() + 1] = c;
      if (!c) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t k = i - b.size() + 1 + j;
        r[k] = (r[k] + p_ - mulm(c, b[j])) % p_;
      }
    }
    r.resize(b.size() - 1);
    trim(r);
    trim(q);
  }

  ZpPoly mod(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly q, r;
    divmod(a, b, q, r);
    return r;
  }

  ZpPoly quo(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly q, r;
    divmod(a, b, q, r);
    return q;
  }

  ZpPoly gcd(ZpPoly a, ZpPoly b) const {
    while (!b.empty()) {
      ZpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s a + t b = gcd(a, b), gcd monic.
  ZpPoly ext_gcd(const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t) const {
    ZpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      ZpPoly q, r;
      divmod(r0, r1, q, r);
      ZpPoly s2 = sub(s0, mul(q, s1));
      ZpPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const std::uint64_t c = inv(r0.back());
    s = scale(s0, c);
    t = scale(t0, c);
    return scale(r0, c);
  }

  ZpPoly powmod(const ZpPoly& base, const Int& e, const ZpPoly& m) const {
    ZpPoly result{1};
    ZpPoly b = mod(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = mod(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, b), m);
    }
    return result;
  }

  ZpPoly derivative(const ZpPoly& a) const {
    if (a.size() <= 1) return {};
    ZpPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulm(a[i], i % p_);
    trim(r);
    return r;
  }

 private:
  std::uint64_t p_;
};

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial. Output factors are monic.
std::vector<ZpPoly> factor_mod_p(const Zp& zp, const ZpPoly& f, std::mt19937_64& rng) {
  std::vector<ZpPoly> out;
  const ZpPoly x{0, 1};
  const Int p = static_cast<unsigned long>(zp.prime());

  std::vector<std::pair<ZpPoly, int>> by_degree;
  ZpPoly rest = f;
  ZpPoly h = zp.mod(x, rest);
  for (int d = 1; 2 * d <= Zp::deg(rest); ++d) {
    h = zp.powmod(h, p, rest);
    ZpPoly g = zp.gcd(rest, zp.sub(h, x));
    if (Zp::deg(g) > 0) {
      by_degree.emplace_back(g, d);
      rest = zp.quo(rest, g);
      h = zp.mod(h, rest);
    }
  }
  if (Zp::deg(rest) > 0) by_degree.emplace_back(rest, Zp::deg(rest));

  std::uniform_int_distribution<std::uint64_t> coin(0, zp.prime() - 1);
  for (auto& [block, d] : by_degree) {
    Int pd;
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    const Int exponent = (pd - 1) / 2;
    std::vector<ZpPoly> pending{block};
    while (!pending.empty()) {
      ZpPoly g = std::move(pending.back());
      pending.pop_back();
      if (Zp::deg(g) == d) {
        out.push_back(std::move(g));
        continue;
      }
      for (;;) {
        ZpPoly a(static_cast<std::size_t>(Zp::deg(g)));
        for (auto& c : a) c = coin(rng);
        Zp::trim(a);
        if (Zp::deg(a) < 1) continue;
        ZpPoly b = zp.sub(zp.powmod(a, exponent, g), ZpPoly{1});
        ZpPoly split = zp.gcd(g, b);
        if (Zp::deg(split) > 0 && Zp::deg(split) < Zp::deg(g)) {
          pending.push_back(zp.quo(g, split));
          pending.push_back(std::move(split));
          break;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials over Z/m for Hensel lifting; coefficients kept in [0, m).

using ModPoly = std::vector<Int>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const ModPoly& a, const Int& m) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  trim(r);
  return r;
}

ModPoly from_zp(const ZpPoly& a) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

ModPoly add(const ModPoly& a, const ModPoly& b) {
  ModPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

ModPoly sub(const ModPoly& a, const ModPoly& b) {
  ModPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

ModPoly mul(const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

// a = q h + r mod m, h monic.
void divmod_monic(const ModPoly& a_in, const ModPoly& h, const Int& m, ModPoly& q, ModPoly& r) {
  r = reduce(a_in, m);
  q.clear();
  if (r.size() < h.size()) return;
  q.assign(r.size() - h.size() + 1, Int(0));
  for (std::size_t i = r.size(); i-- >= h.size();) {
    mpz_fdiv_r(r[i].get_mpz_t(), r[i].get_mpz_t(), m.get_mpz_t());
    const Int c = r[i];
    q[i - h.size() + 1] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < h.size(); ++j) {
      mpz_submul(r[i - h.size() + 1 + j].get_mpz_t(), c.get_mpz_t(), h[j].get_mpz_t());
    }
  }
  r.resize(h.size() - 1);
  r = reduce(r, m);
  q = reduce(q, m);
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic
// becomes the same relations mod m^2.
void hensel_step(const ModPoly& f, ModPoly& g, ModPoly& h, ModPoly& s, ModPoly& t, const Int& m) {
  const Int m2 = m * m;
  const ModPoly e = reduce(sub(f, mul(g, h)), m2);
  ModPoly q, r;
  divmod_monic(mul(s, e), h, m2, q, r);
  const ModPoly g2 = reduce(add(g, add(mul(t, e), mul(q, g))), m2);
  const ModPoly h2 = reduce(add(h, r), m2);
  const ModPoly b = reduce(sub(add(mul(s, g2), mul(t, h2)), ModPoly{Int(1)}), m2);
  ModPoly c, d;
  divmod_monic(mul(s, b), h2, m2, c, d);
  s = reduce(sub(s, d), m2);
  t = reduce(sub(t, add(mul(t, b), mul(c, g2))), m2);
  g = g2;
  h = h2;
}

// Lifts F = lc(F) * prod(factors) mod p to monic factors mod M = p^(2^levels).
// F only needs to be correct mod M.
void lift_tree(const ModPoly& F, std::span<const ZpPoly> factors, const Zp& zp, int levels, const Int& M,
               std::vector<ModPoly>& out) {
  if (factors.size() == 1) {
    Int inv;
    mpz_invert(inv.get_mpz_t(), F.back().get_mpz_t(), M.get_mpz_t());
    ModPoly monic = F;
    for (auto& c : monic) c *= inv;
    out.push_back(reduce(monic, M));
    return;
  }
  const std::size_t half = factors.size() / 2;
  auto left = factors.first(half);
  auto right = factors.subspan(half);
  ZpPoly g0{mpz_fdiv_ui(F.back().get_mpz_t(), zp.prime())};
  for (const auto& u : left) g0 = zp.mul(g0, u);
  ZpPoly h0{1};
  for (const auto& u : right) h0 = zp.mul(h0, u);
  ZpPoly s0, t0;
  zp.ext_gcd(g0, h0, s0, t0);

  ModPoly g = from_zp(g0), h = from_zp(h0), s = from_zp(s0), t = from_zp(t0);
  Int m = static_cast<unsigned long>(zp.prime());
  for (int level = 0; level < levels; ++level) {
    hensel_step(reduce(F, m * m), g, h, s, t, m);
    m *= m;
  }
  lift_tree(g, left, zp, levels, M, out);
  lift_tree(h, right, zp, levels, M, out);
}

IntPoly centered(const ModPoly& a, const Int& M) {
  const Int half = M / 2;
  std::vector<Int> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(v[i].get_mpz_t(), a[i].get_mpz_t(), M.get_mpz_t());
    if (v[i] > half) v[i] -= M;
  }
  return IntPoly(std::move(v));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// f primitive, squarefree, positive leading coefficient, degree >= 1.
std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
  if (f.degree() <= 1) return {f};

  std::mt19937_64 rng(0x6b6e6f74ULL);
  constexpr int kPrimesTried = 8;
  std::uint64_t best_p = 0;
  std::vector<ZpPoly> best;
  int tried = 0;
  for (std::uint64_t p = 3; tried < kPrimesTried && p < (1ULL << 31); p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_fdiv_ui(f.leading().get_mpz_t(), p) == 0) continue;
    Zp zp(p);
    ZpPoly fp = zp.reduce(f);
    if (Zp::deg(zp.gcd(fp, zp.derivative(fp))) != 0) continue;
    ++tried;
    auto factors = factor_mod_p(zp, zp.monic(fp), rng);
    if (best_p == 0 || factors.size() < best.size()) {
      best_p = p;
      best = std::move(factors);
    }
    if (best.size() == 1) return {f};
  }
  if (best_p == 0) throw InternalError("no suitable prime for factorization of " + f.to_string());

  // Coefficients of b * g / lc(g), g | f, stay below |b| 2^n ||f||_2.
  const int n = f.degree();
  const Int b = f.leading();
  Int norm2 = 0;
  for (const auto& c : f.coefficients()) norm2 += c * c;
  Int bound = sqrt(norm2) + 1;
  bound *= abs(b);
  bound <<= static_cast<unsigned long>(n);

  const Zp zp(best_p);
  Int M = static_cast<unsigned long>(best_p);
  int levels = 0;
  while (M <= 2 * bound) {
    M *= M;
    ++levels;
  }

  std::sort(best.begin(), best.end());
  std::vector<ModPoly> lifted;
  lift_tree(reduce(ModPoly(f.coefficients()), M), best, zp, levels, M, lifted);

  std::vector<IntPoly> result;
  IntPoly rest = f;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  for (std::size_t size = 1; 2 * size <= remaining.size();) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    const Int lead = rest.leading();
    const Int tail = lead * rest.coefficient(0);
    for (;;) {
      ModPoly candidate{lead};
      for (std::size_t i : pick) candidate = reduce(mul(candidate, lifted[remaining[i]]), M);
      IntPoly g = centered(candidate, M);
      if (g.coefficient(0) != 0 && mpz_divisible_p(tail.get_mpz_t(), g.coefficient(0).get_mpz_t())) {
        IntPoly gp = g.primitive_part();
        auto [quotient, ok] = divide_exact(rest, gp);
        if (ok) {
          result.push_back(gp);
          rest = quotient.primitive_part();
          for (std::size_t i = size; i-- > 0;) remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick[i]));
          found = true;
          break;
        }
      }
      // Next combination of `size` indices out of remaining.size().
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == remaining.size() - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.degree() >= 1) result.push_back(rest);
  return result;
}

}  // namespace

Factorization factor(const IntPoly& p) {
  if (p.is_zero()) throw ConstraintError("cannot factor the zero polynomial");
  Factorization out;
  out.unit = p.content();
  if (p.leading() < 0) out.unit = -out.unit;
  IntPoly q = p.primitive_part();

  if (std::size_t e = q.low_order(); e > 0) {
    out.factors.emplace_back(IntPoly::monomial(Int(1), 1), static_cast<int>(e));
    q = q.shift_down(e);
  }
  if (q.degree() >= 1) {
    IntPoly squarefree = divide_exact(q, gcd(q, q.derivative())).first.primitive_part();
    for (const IntPoly& g : factor_squarefree(squarefree)) {
      int multiplicity = 0;
      for (;;) {
        auto [quotient, ok] = divide_exact(q, g);
        if (!ok) break;
        q = std::move(quotient);
        ++multiplicity;
      }
      if (multiplicity == 0) throw InternalError("factor " + g.to_string() + " does not divide its source");
      out.factors.emplace_back(g, multiplicity);
    }
    if (q.degree() != 0 || abs(q.leading()) != 1) throw InternalError("factorization left a nontrivial cofactor");
    // q is now a unit; fold its sign in.
    if (q.leading() < 0) out.unit = -out.unit;
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coefficients() < b.first.coefficients();
  });
  return out;
}

}  // namespace knotcalc
