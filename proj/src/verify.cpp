#include "knotcalc/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>

#include "knotcalc/errors.hpp"
#include "knotcalc/invariants.hpp"
#include "knotcalc/lattice.hpp"
#include "knotcalc/polynomial.hpp"

namespace knotcalc::verify {

namespace {

constexpr int kRandomCases = 1000;

constexpr std::string_view kRingLaws = "symmetric polynomial ring laws";
constexpr std::string_view kProductRule = "T_i T_k = T_{i+k} + T_{|i-k|}";
constexpr std::string_view kLemma3 = "Lemma 3 closed form for t0(f T_k)";
constexpr std::string_view kT0Additive = "t0 is a homomorphism";
constexpr std::string_view kNormalization = "Alexander normalization Delta(1) = 1";
constexpr std::string_view kGrammar = "knot expression grammar";
constexpr std::string_view kPropCabling = "Proposition d1((T_{p,q})_{2,2pq+-1}) = d1(T_{2,2pq+-1})";
constexpr std::string_view kCassonSeparation = "Casson separation lambda(M_{n,k}) - lambda(M_{m,k}) = 4n - 4m";
constexpr std::string_view kEvenForm = "even negative definite rank-8k form, 0 + 8k <= 4 d(-Y)";

std::string fmt(const char* pattern, auto... args) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// Collects the cases of one randomized check and keeps the smallest failure.
class Batch {
 public:
  Batch(std::string id, std::string_view provenance) : id_(std::move(id)), provenance_(provenance) {}

  void pass() { ++cases_; }
  void fail(std::size_t size, std::string description) {
    ++cases_;
    ++failures_;
    if (failures_ == 1 || size < best_size_) {
      best_size_ = size;
      best_ = std::move(description);
    }
  }
  void expect(bool ok, std::size_t size, const std::function<std::string()>& describe) {
    if (ok) {
      pass();
    } else {
      fail(size, describe());
    }
  }

  CheckResult result() const {
    if (failures_ == 0) return {id_, true, std::string(provenance_), std::to_string(cases_) + " cases"};
    return {id_, false, std::string(provenance_),
            std::to_string(failures_) + "/" + std::to_string(cases_) + " cases failed; smallest: " + best_};
  }

 private:
  std::string id_;
  std::string_view provenance_;
  int cases_ = 0;
  int failures_ = 0;
  std::size_t best_size_ = 0;
  std::string best_;
};

// Runs `body`, turning a false return or an exception into a failed check.
CheckResult single(std::string id, std::string_view provenance, const std::function<std::string()>& body) {
  try {
    std::string problem = body();
    if (problem.empty()) return {std::move(id), true, std::string(provenance), "ok"};
    return {std::move(id), false, std::string(provenance), std::move(problem)};
  } catch (const std::exception& e) {
    return {std::move(id), false, std::string(provenance), std::string("exception: ") + e.what()};
  }
}

std::string mismatch(std::string_view what, const Int& got, const Int& want) {
  return std::string(what) + " = " + got.get_str() + ", expected " + want.get_str();
}

// Product through dense Z[t] convolution, independent of the T-basis rule.
SymPoly convolution_product(const SymPoly& f, const SymPoly& g) {
  if (f.is_zero() || g.is_zero()) return SymPoly();
  return symmetrize(monomialize(f) * monomialize(g));
}

// f''(1) from the monomial form p = t^d f: f'' = p'' - 2d p' + d(d+1) p at t = 1.
Int second_derivative_by_monomials(const SymPoly& f) {
  const IntPoly p = monomialize(f);
  const Int d = to_int(f.degree());
  const IntPoly dp = p.derivative();
  return dp.derivative().evaluate(1) - 2 * d * dp.evaluate(1) + d * (d + 1) * p.evaluate(1);
}

std::size_t size_of(const SymPoly& f) { return static_cast<std::size_t>(f.degree()); }

void sympoly_suite(std::uint64_t seed, std::vector<CheckResult>& out) {
  std::mt19937_64 rng(seed);
  {
    Batch b("sympoly.ring-laws", kRingLaws);
    const SymPoly zero, one(Int(1));
    for (int i = 0; i < kRandomCases; ++i) {
      const SymPoly f = random_sympoly(rng, 12, 9, false);
      const SymPoly g = random_sympoly(rng, 12, 9, false);
      const SymPoly h = random_sympoly(rng, 12, 9, false);
      const bool ok = f + g == g + f && f * g == g * f && (f * g) * h == f * (g * h) &&
                      (f + g) + h == f + (g + h) && f * (g + h) == f * g + f * h && f + zero == f &&
                      f * one == f && (f - f).is_zero() && (f * zero).is_zero();
      b.expect(ok, size_of(f) + size_of(g) + size_of(h), [&] {
        return "f = " + f.to_tbasis_string() + ", g = " + g.to_tbasis_string() + ", h = " + h.to_tbasis_string();
      });
    }
    out.push_back(b.result());
  }
  {
    Batch b("sympoly.monomial-oracle", kProductRule);
    for (int i = 0; i < kRandomCases; ++i) {
      const SymPoly f = random_sympoly(rng, 30, 50, false);
      const SymPoly g = random_sympoly(rng, 30, 50, false);
      b.expect(mul(f, g) == convolution_product(f, g), size_of(f) + size_of(g),
               [&] { return "f = " + f.to_tbasis_string() + ", g = " + g.to_tbasis_string(); });
    }
    out.push_back(b.result());
  }
  {
    Batch b("sympoly.lemma3", kLemma3);
    std::uniform_int_distribution<std::int64_t> pick_k(1, 40);
    for (int i = 0; i < kRandomCases; ++i) {
      const SymPoly f = random_sympoly(rng, 30, 9, true);
      const std::int64_t k = pick_k(rng);
      const Int closed = lemma3_t0_times_Tk(f, k);
      const Int brute = t0(convolution_product(f, SymPoly::basis(k)));
      b.expect(closed == brute, size_of(f) + static_cast<std::size_t>(k), [&] {
        return "f = " + f.to_tbasis_string() + ", k = " + std::to_string(k) + ": " +
               mismatch("closed form", closed, brute);
      });
    }
    out.push_back(b.result());
  }
  {
    Batch b("sympoly.t0-additive", kT0Additive);
    for (int i = 0; i < kRandomCases; ++i) {
      const SymPoly f = random_sympoly(rng, 30, 1000, false);
      const SymPoly g = random_sympoly(rng, 30, 1000, false);
      b.expect(t0(f + g) == t0(f) + t0(g), size_of(f) + size_of(g),
               [&] { return "f = " + f.to_tbasis_string() + ", g = " + g.to_tbasis_string(); });
    }
    out.push_back(b.result());
  }
  for (std::int64_t k = 1; k <= 50; ++k) {
    for (int sign : {1, -1}) {
      const std::int64_t q = 4 * k + sign;
      out.push_back(single(fmt("sympoly.torus.k%02lld.%s", static_cast<long long>(k), sign > 0 ? "plus" : "minus"),
                           provenance::kTorusValue, [&]() -> std::string {
                             const SymPoly closed = alexander_torus_two_strand((q - 1) / 2);
                             if (closed != alexander_torus_by_division(2, q)) {
                               return "two-strand formula and exact division disagree for T(2," +
                                      std::to_string(q) + ")";
                             }
                             const Int want = -2 * to_int(k);
                             const Int pipeline = -2 * t0(closed);
                             if (pipeline != want) return mismatch("-2 t0(Delta)", pipeline, want);
                             const InvariantReport r = d1_torus_two_strand(q);
                             if (r.status != Status::Exact || r.integer() != want) return "closed form: " + r.render();
                             return {};
                           }));
    }
  }
  {
    Batch b("sympoly.normalization", kNormalization);
    for (int i = 0; i < kRandomCases; ++i) {
      const KnotExpr k = random_knot(rng, 4);
      const std::string text = k.to_string();
      b.expect(eval_at_one(alexander(k)) == 1, text.size(), [&] { return text; });
    }
    out.push_back(b.result());
  }
  {
    Batch b("sympoly.parse-roundtrip", kGrammar);
    for (int i = 0; i < kRandomCases; ++i) {
      const KnotExpr k = random_knot(rng, 4);
      const std::string text = k.to_string();
      bool ok = false;
      try {
        const KnotExpr back = KnotExpr::parse(text);
        ok = back == k && back.to_string() == text;
      } catch (const std::exception&) {
        ok = false;
      }
      b.expect(ok, text.size(), [&] { return text; });
    }
    out.push_back(b.result());
  }
}

void prop_prop_suite(std::vector<CheckResult>& out) {
  for (std::int64_t p = 2; p <= 7; ++p) {
    for (std::int64_t q = p + 1; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (int sign : {1, -1}) {
        out.push_back(single(
            fmt("prop-prop.p%lld.q%lld.%s", static_cast<long long>(p), static_cast<long long>(q),
                sign > 0 ? "plus" : "minus"),
            kPropCabling, [&]() -> std::string {
              const std::int64_t cable_q = 2 * p * q + sign;
              const KnotExpr companion = KnotExpr::torus(p, q);
              const KnotExpr cable = KnotExpr::cable2(cable_q, companion);
              const SurgeryDesc s(cable, 4 * p * q + sign);
              if (!is_known_lens_surgery(s)) return "slope " + std::to_string(s.slope) + " not recognised as lens";
              const Int want = d1_torus_two_strand(cable_q).integer();
              const InvariantReport lens = d1_lens(s, false);
              if (lens.status != Status::Exact || lens.integer() != want) {
                return lens.render() + ", expected " + want.get_str();
              }
              const SymPoly delta = convolution_product(substitute_power(alexander(companion), 2),
                                                        alexander_torus_two_strand((cable_q - 1) / 2));
              const Int by_product = -2 * t0(delta);
              if (by_product != want) return mismatch("-2 t0 of the cabling product", by_product, want);
              return {};
            }));
      }
    }
  }
}

KnotExpr casson_knot(std::int64_t n, std::int64_t k) { return KnotExpr::cable2(4 * k + 1, KnotExpr::family_k(n)); }

void casson_suite(std::vector<CheckResult>& out) {
  for (std::int64_t k = 1; k <= 4; ++k) {
    for (std::int64_t n = -5; n <= 5; ++n) {
      out.push_back(single(fmt("casson.lambda.k%lld.n%+03lld", static_cast<long long>(k), static_cast<long long>(n)),
                           provenance::kCasson, [&]() -> std::string {
                             const KnotExpr m = casson_knot(n, k);
                             const Int lambda = casson_plus_one(SurgeryDesc(m, 1));
                             const Int want = 4 * to_int(n) + 2 * to_int(k) * to_int(k) + to_int(k);
                             if (lambda != want) return mismatch("lambda", lambda, want);
                             const Int d2 = second_derivative_by_monomials(alexander(m));
                             if (2 * lambda != d2) return mismatch("2 lambda", 2 * lambda, d2);
                             return {};
                           }));
    }
    Batch b(fmt("casson.separation.k%lld", static_cast<long long>(k)), kCassonSeparation);
    for (std::int64_t n = -5; n <= 5; ++n) {
      for (std::int64_t m = -5; m <= 5; ++m) {
        if (m == n) continue;
        const Int diff = casson_plus_one(SurgeryDesc(casson_knot(n, k), 1)) -
                         casson_plus_one(SurgeryDesc(casson_knot(m, k), 1));
        b.expect(diff == 4 * to_int(n - m) && diff != 0, static_cast<std::size_t>(std::abs(n) + std::abs(m)), [&] {
          return "n = " + std::to_string(n) + ", m = " + std::to_string(m) + ": " +
                 mismatch("difference", diff, 4 * to_int(n - m));
        });
      }
    }
    out.push_back(b.result());
  }
}

void witness_suite(std::vector<CheckResult>& out) {
  for (std::int64_t a = 2; a <= 40; a += 2) {
    for (std::int64_t b = 0; b < a; b += 2) {
      for (std::int64_t n = 1; n <= 5; ++n) {
        out.push_back(single(fmt("witness.a%02lld.b%02lld.n%lld", static_cast<long long>(a),
                                 static_cast<long long>(b), static_cast<long long>(n)),
                             provenance::kTheorem2, [&]() -> std::string {
                               const Theorem2Witness w = theorem2_witness(a, b, n);
                               if (w.d1.status != Status::Exact || abs(w.d1.integer()) != a) {
                                 return "|d1| != a: " + w.d1.render();
                               }
                               if (w.tau.status != Status::Exact || 2 * abs(w.tau.integer()) != b) {
                                 return "2|tau| != b: " + w.tau.render();
                               }
                               // Recompute from the expression alone: the companion is a sum of
                               // m negative genus-one knots, so tau = -m and epsilon = -1.
                               const KnotExpr& c = w.knot.child();
                               const std::int64_t q = w.knot.q();
                               const Int m = c.kind() == KnotExpr::Kind::Sum ? to_int(c.parts().size()) : Int(1);
                               const Int tau = -2 * m + (q + 1) / 2;
                               const Int d1 = -2 * to_int(q % 4 == 1 ? (q - 1) / 4 : (q + 1) / 4);
                               if (tau != w.tau.integer()) return mismatch("tau from the expression", tau, w.tau.integer());
                               if (d1 != w.d1.integer()) return mismatch("d1 from the expression", d1, w.d1.integer());
                               if (KnotExpr::parse(w.knot.to_string()) != w.knot) return "expression does not round-trip";
                               return {};
                             }));
      }
    }
  }

  // Fox-Milnor separation of w_l # mirror(w_n) for the instances small enough to factor.
  for (std::int64_t a = 2; a <= 40; a += 2) {
    for (std::int64_t b = 0; b < a; b += 2) {
      const SymPoly probe = alexander(theorem2_witness(a, b, 1).knot);
      if (2 * 2 * probe.degree() > kDefaultFactorDegreeBound) continue;
      for (std::int64_t l = 1; l <= 5; ++l) {
        for (std::int64_t n = l; n <= 5; ++n) {
          if (n == l && l != 1) continue;
          const bool control = n == l;
          out.push_back(single(
              fmt("witness.fox-milnor.a%02lld.b%02lld.n%lld-n%lld", static_cast<long long>(a),
                  static_cast<long long>(b), static_cast<long long>(l), static_cast<long long>(n)),
              provenance::kFoxMilnor, [&]() -> std::string {
                const SymPoly f = alexander(theorem2_witness(a, b, l).knot) * alexander(theorem2_witness(a, b, n).knot);
                const FoxMilnorResult r = fox_milnor_check(f);
                const FoxMilnorResult want = control ? FoxMilnorResult::IsFMForm : FoxMilnorResult::NotFMForm;
                if (r != want) {
                  return "Delta = " + f.to_tbasis_string() + " classified " + std::string(to_string(r)) +
                         ", expected " + std::string(to_string(want));
                }
                return {};
              }));
        }
      }
    }
  }
}

void lattice_suite(std::vector<CheckResult>& out) {
  for (std::size_t n = 0; n <= 8; ++n) {
    out.push_back(single(fmt("lattice.diag.n%zu", n), provenance::kTheorem1Equality, [&]() -> std::string {
      const DBound d = os_d_lower_bound(IntLattice::diagonal(std::vector<Int>(n, Int(-1))), {3, 12});
      if (d.bound != 0) return "bound " + d.bound.get_str() + ", expected 0";
      return {};
    }));
  }
  out.push_back(single("lattice.neg-e8.block", kEvenForm, []() -> std::string {
    const IntLattice e8 = IntLattice::negative_e8();
    if (e8.determinant() != 1) return "det " + e8.determinant().get_str();
    if (!is_even(e8)) return "not even";
    if (definiteness(e8) != Definiteness::NegativeDefinite) return "not negative definite";
    if (signature(e8) != Inertia{0, 8, -8}) return "signature is not (0, 8)";
    return {};
  }));
  for (std::size_t k = 1; k <= 2; ++k) {
    out.push_back(single(fmt("lattice.neg-e8.k%zu", k), kEvenForm, [&]() -> std::string {
      const DBound d = os_d_lower_bound(IntLattice::repeat(IntLattice::negative_e8(), k), {2, 16});
      const Rational want(to_int(static_cast<std::int64_t>(2 * k)));
      if (d.bound != want) return "bound " + d.bound.get_str() + ", expected " + want.get_str();
      return {};
    }));
  }
  for (std::int64_t k = 1; k <= 50; ++k) {
    for (int sign : {1, -1}) {
      out.push_back(single(fmt("lattice.certificate.k%02lld.%s", static_cast<long long>(k), sign > 0 ? "plus" : "minus"),
                           provenance::kTheorem1Equality, [&]() -> std::string {
                             const Theorem1Certificate c = theorem1_certificate(k, sign);
                             const Int want = -2 * to_int(k);
                             if (c.upper != want) return mismatch("upper", c.upper, want);
                             if (c.lower != want) return mismatch("lower", c.lower, want);
                             const InvariantReport r = d1_cable_two_strand(KnotExpr::family_k(1), 4 * k + sign);
                             if (r.status != Status::Exact || r.integer() != want) return "report " + r.render();
                             return {};
                           }));
    }
  }
}

}  // namespace

std::string CheckResult::render() const {
  if (passed) return "ok   " + id + " (" + detail + ")";
  return "FAIL " + id + " [" + provenance + "]: " + detail;
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"sympoly", "prop-prop", "casson", "witness", "lattice", "all"};
  return names;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw ConstraintError("unknown suite '" + std::string(name) + "'");
  }
  SuiteReport report;
  report.suite = std::string(name);
  report.seed = seed;
  const bool all = name == "all";
  if (all || name == "sympoly") sympoly_suite(seed, report.checks);
  if (all || name == "prop-prop") prop_prop_suite(report.checks);
  if (all || name == "casson") casson_suite(report.checks);
  if (all || name == "witness") witness_suite(report.checks);
  if (all || name == "lattice") lattice_suite(report.checks);
  std::sort(report.checks.begin(), report.checks.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  return report;
}

SymPoly random_sympoly(std::mt19937_64& rng, int max_degree, int bound, bool unit_at_one) {
  std::uniform_int_distribution<int> pick_degree(0, max_degree);
  std::uniform_int_distribution<int> pick_coeff(-bound, bound);
  const int degree = pick_degree(rng);
  SymPoly::CoefficientMap coeffs;
  Int sum = 0;
  for (int i = 1; i <= degree; ++i) {
    int c = pick_coeff(rng);
    if (i == degree && c == 0) c = 1;
    if (c != 0) coeffs.emplace(i, c);
    sum += c;
  }
  const Int a0 = unit_at_one ? Int(1 - 2 * sum) : Int(pick_coeff(rng));
  return SymPoly(a0, coeffs);
}

KnotExpr random_knot(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 5);
  const int choice = depth <= 1 ? pick(rng) % 3 : pick(rng);
  switch (choice) {
    case 0:
      return KnotExpr::unknot();
    case 1: {
      std::uniform_int_distribution<std::int64_t> pp(2, 5), qq(3, 7), flip(0, 3);
      std::int64_t p = pp(rng), q = qq(rng);
      while (p >= q || std::gcd(p, q) != 1) {
        p = pp(rng);
        q = qq(rng);
      }
      switch (flip(rng)) {
        case 0:
          return KnotExpr::torus(-p, q);
        case 1:
          return KnotExpr::torus(q, p);
        default:
          return KnotExpr::torus(p, q);
      }
    }
    case 2:
      return KnotExpr::family_k(std::uniform_int_distribution<std::int64_t>(-4, 4)(rng));
    case 3: {
      std::int64_t q = 2 * std::uniform_int_distribution<std::int64_t>(-4, 3)(rng) + 1;
      return KnotExpr::cable2(q, random_knot(rng, depth - 1));
    }
    case 4: {
      std::vector<KnotExpr> parts(std::uniform_int_distribution<std::size_t>(2, 3)(rng));
      for (auto& part : parts) part = random_knot(rng, depth - 1);
      return KnotExpr::sum(std::move(parts));
    }
    default:
      return KnotExpr::mirror(random_knot(rng, depth - 1));
  }
}

}  // namespace knotcalc::verify
