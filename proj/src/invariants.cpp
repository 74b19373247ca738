#include "knotcalc/invariants.hpp"

#include <json.hpp>

#include "knotcalc/errors.hpp"
#include "knotcalc/factor.hpp"
#include "knotcalc/polynomial.hpp"

namespace knotcalc {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Exact:
      return "exact";
    case Status::UpperBound:
      return "upper_bound";
    case Status::Interval:
      return "interval";
    case Status::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::string_view to_string(FoxMilnorResult r) {
  switch (r) {
    case FoxMilnorResult::IsFMForm:
      return "IsFMForm";
    case FoxMilnorResult::NotFMForm:
      return "NotFMForm";
    case FoxMilnorResult::Undecided:
      return "Undecided";
  }
  return "Undecided";
}

InvariantReport InvariantReport::exact(std::string name, Int v, std::string_view prov) {
  return {std::move(name), Status::Exact, std::move(v), std::string(prov)};
}

InvariantReport InvariantReport::symbolic(std::string name, std::string text, std::string_view prov) {
  return {std::move(name), Status::Exact, std::move(text), std::string(prov)};
}

InvariantReport InvariantReport::upper_bound(std::string name, Int v, std::string_view prov) {
  return {std::move(name), Status::UpperBound, std::move(v), std::string(prov)};
}

InvariantReport InvariantReport::interval(std::string name, Int lo, Int hi, std::string_view prov) {
  return {std::move(name), Status::Interval, std::make_pair(std::move(lo), std::move(hi)), std::string(prov)};
}

InvariantReport InvariantReport::unknown(std::string name) { return {std::move(name), Status::Unknown, {}, {}}; }

const Int& InvariantReport::integer() const {
  if (const Int* v = std::get_if<Int>(&value)) return *v;
  throw ConstraintError("report '" + name + "' does not carry a single integer");
}

std::string InvariantReport::render() const {
  const std::string tail = " (" + std::string(to_string(status)) + "; " + provenance + ")";
  switch (status) {
    case Status::Exact:
      if (const auto* text = std::get_if<std::string>(&value)) return name + " = " + *text + tail;
      return name + " = " + integer().get_str() + tail;
    case Status::UpperBound:
      return name + " <= " + integer().get_str() + tail;
    case Status::Interval: {
      const auto& [lo, hi] = std::get<std::pair<Int, Int>>(value);
      return name + " in [" + lo.get_str() + ", " + hi.get_str() + "]" + tail;
    }
    case Status::Unknown:
      break;
  }
  return name + " = unknown";
}

namespace {

nlohmann::ordered_json int_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

}  // namespace

std::string InvariantReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["status"] = std::string(to_string(status));
  if (const auto* v = std::get_if<Int>(&value)) {
    j["value"] = int_json(*v);
  } else if (const auto* text = std::get_if<std::string>(&value)) {
    j["value"] = *text;
  } else if (const auto* range = std::get_if<std::pair<Int, Int>>(&value)) {
    j["lo"] = int_json(range->first);
    j["hi"] = int_json(range->second);
  }
  j["provenance"] = provenance;
  return j.dump();
}

SurgeryDesc::SurgeryDesc(KnotExpr k, std::int64_t s) : knot(std::move(k)), slope(s) {
  if (s == 0) throw ConstraintError("surgery slope must be nonzero");
}

Int casson_plus_one(const SurgeryDesc& s) {
  if (s.slope != 1) throw ConstraintError("the Casson formula here is for +1 surgery only");
  Int twice = second_derivative_at_one(alexander(s.knot));
  if (!mpz_even_p(twice.get_mpz_t())) throw InternalError("Delta''(1) is odd");
  return twice / 2;
}

bool is_known_lens_surgery(const SurgeryDesc& s) {
  if (s.slope <= 0) return false;
  const KnotExpr& k = s.knot;
  switch (k.kind()) {
    case KnotExpr::Kind::Unknot:
      return true;
    case KnotExpr::Kind::Torus: {
      const std::int64_t pq = k.p() * k.q();
      return s.slope == pq + 1 || s.slope == pq - 1;
    }
    case KnotExpr::Kind::Cable2: {
      if (k.child().kind() != KnotExpr::Kind::Torus) return false;
      const std::int64_t pq = k.child().p() * k.child().q();
      for (int sign : {1, -1}) {
        if (k.q() == 2 * pq + sign && s.slope == 4 * pq + sign) return true;
      }
      return false;
    }
    default:
      return false;
  }
}

InvariantReport d1_lens(const SurgeryDesc& s, bool assume_lens) {
  if (s.slope <= 0) return InvariantReport::unknown("d1");
  if (!assume_lens && !is_known_lens_surgery(s)) return InvariantReport::unknown("d1");
  return InvariantReport::exact("d1", -2 * t0(alexander(s.knot)), provenance::kLensSurgery);
}

InvariantReport d1_torus_two_strand(std::int64_t q) {
  if (q % 2 == 0 || q <= 1) throw ConstraintError("d1(T(2,q)) needs odd q > 1, got " + std::to_string(q));
  const std::int64_t r = (q - 1) / 2;
  return InvariantReport::exact("d1", to_int(-2 * ((r + 1) / 2)), provenance::kTorusValue);
}

namespace {

// q = 4k +- 1 with q > 1 odd.
std::int64_t cable_k(std::int64_t q) { return q % 4 == 1 ? (q - 1) / 4 : (q + 1) / 4; }

void require_odd(std::int64_t q) {
  if (q % 2 == 0) throw ConstraintError("cable parameter q must be odd, got " + std::to_string(q));
}

}  // namespace

InvariantReport d1_cable_two_strand(const KnotExpr& k, std::int64_t q) {
  require_odd(q);
  if (q <= 1) return InvariantReport::interval("d1", Int(-2), Int(0), provenance::kSkein);
  const Int value = to_int(-2 * cable_k(q));
  if (attributes(k).bounds_nullhomologous_disk == true) {
    return InvariantReport::exact("d1", value, provenance::kTheorem1Equality);
  }
  return InvariantReport::upper_bound("d1", value, provenance::kTheorem1Inequality);
}

InvariantReport tau_cable_two_strand(const KnotExpr& k, std::int64_t q) {
  require_odd(q);
  const KnotAttributes a = attributes(k);
  if (!a.epsilon) return InvariantReport::unknown("tau");
  const Int qq = to_int(q);
  if (*a.epsilon == 0) {
    // tau(T(2,q)) = sign(q) (|q| - 1) / 2, which is (q-1)/2 or (q+1)/2.
    return InvariantReport::exact("tau", q > 0 ? Int((qq - 1) / 2) : Int((qq + 1) / 2), provenance::kHomCabling);
  }
  if (!a.tau) return InvariantReport::unknown("tau");
  const Int shift = *a.epsilon == 1 ? Int((qq - 1) / 2) : Int((qq + 1) / 2);
  return InvariantReport::exact("tau", 2 * *a.tau + shift, provenance::kHomCabling);
}

InvariantReport ds_cable(const KnotExpr& knot, std::int64_t k, int sign) {
  if (k < 1) throw ConstraintError("ds needs k >= 1");
  if (sign != 1 && sign != -1) throw ConstraintError("ds sign must be +1 or -1");
  if (attributes(knot).bounds_nullhomologous_disk != true) return InvariantReport::unknown("ds");
  return InvariantReport::exact("ds", to_int(k), provenance::kCorollary1);
}

Theorem2Witness theorem2_witness(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (a % 2 != 0 || b % 2 != 0) throw ConstraintError("witness needs even a and b");
  if (!(a > b && b >= 0)) throw ConstraintError("witness needs a > b >= 0");
  if (n < 1) throw ConstraintError("witness needs n >= 1");
  const bool half_b_odd = (b / 2) % 2 == 1;
  const std::int64_t m = half_b_odd ? (2 * a - b + 2) / 4 : (2 * a - b) / 4;
  const std::int64_t q = half_b_odd ? 2 * a + 1 : 2 * a - 1;
  const KnotExpr companion = KnotExpr::family_sum(m, n);

  Theorem2Witness w{KnotExpr::cable2(q, companion), d1_cable_two_strand(companion, q),
                    tau_cable_two_strand(companion, q)};
  const std::string where = " for witness(a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                            ",n=" + std::to_string(n) + ") [" + std::string(provenance::kTheorem2) + "]";
  if (w.d1.status != Status::Exact || abs(w.d1.integer()) != a) throw InternalError("|d1| != a" + where);
  if (w.tau.status != Status::Exact || 2 * abs(w.tau.integer()) != b) throw InternalError("2|tau| != b" + where);
  return w;
}

FoxMilnorResult fox_milnor_check(const SymPoly& f, int max_degree) {
  if (f.is_zero()) throw ConstraintError("Fox-Milnor check of the zero polynomial");
  const Int at_one = eval_at_one(f);
  if (at_one != 1 && at_one != -1) throw ConstraintError("Fox-Milnor check needs f(1) = +-1");
  const IntPoly p = monomialize(f);
  if (p.degree() > max_degree) return FoxMilnorResult::Undecided;

  const Factorization fac = factor(p);
  if (!mpz_perfect_square_p(Int(abs(fac.unit)).get_mpz_t())) return FoxMilnorResult::NotFMForm;
  auto multiplicity_of = [&](const IntPoly& g) {
    for (const auto& [h, e] : fac.factors) {
      if (h == g) return e;
    }
    return 0;
  };
  for (const auto& [g, e] : fac.factors) {
    IntPoly partner = g.reciprocal();
    if (partner.leading() < 0) partner = -partner;
    if (partner == g) {
      if (e % 2 != 0) return FoxMilnorResult::NotFMForm;
    } else if (multiplicity_of(partner) != e) {
      return FoxMilnorResult::NotFMForm;
    }
  }
  return FoxMilnorResult::IsFMForm;
}

namespace {

InvariantReport best_d1(const KnotExpr& k, std::optional<std::int64_t> lens_slope) {
  if (lens_slope) {
    InvariantReport r = d1_lens(SurgeryDesc(k, *lens_slope), true);
    if (r.status == Status::Exact) return r;
  }
  switch (k.kind()) {
    case KnotExpr::Kind::Unknot:
      return d1_lens(SurgeryDesc(k, 1), false);
    case KnotExpr::Kind::Torus:
      return d1_lens(SurgeryDesc(k, k.p() * k.q() + 1), false);
    case KnotExpr::Kind::Cable2: {
      const KnotExpr& c = k.child();
      if (c.kind() == KnotExpr::Kind::Torus) {
        const std::int64_t pq = c.p() * c.q();
        for (int sign : {1, -1}) {
          if (k.q() == 2 * pq + sign) return d1_lens(SurgeryDesc(k, 4 * pq + sign), false);
        }
      }
      return d1_cable_two_strand(c, k.q());
    }
    default:
      return InvariantReport::unknown("d1");
  }
}

}  // namespace

std::vector<InvariantReport> report_all(const KnotExpr& k, std::optional<std::int64_t> lens_slope) {
  const SymPoly delta = alexander(k);
  const KnotAttributes attrs = attributes(k);
  std::vector<InvariantReport> out;
  out.push_back(InvariantReport::symbolic("alexander", delta.to_tbasis_string(), provenance::kAlexander));
  out.push_back(InvariantReport::exact("t0", t0(delta), provenance::kT0));
  out.push_back(InvariantReport::exact("casson_s3_plus1", casson_plus_one(SurgeryDesc(k, 1)), provenance::kCasson));
  out.push_back(best_d1(k, lens_slope));

  if (k.kind() == KnotExpr::Kind::Cable2) {
    out.push_back(tau_cable_two_strand(k.child(), k.q()));
  } else if (attrs.tau) {
    out.push_back(InvariantReport::exact("tau", *attrs.tau, provenance::kAttributes));
  } else {
    out.push_back(InvariantReport::unknown("tau"));
  }
  out.push_back(attrs.epsilon ? InvariantReport::exact("epsilon", to_int(*attrs.epsilon), provenance::kAttributes)
                              : InvariantReport::unknown("epsilon"));
  out.push_back(attrs.genus ? InvariantReport::exact("genus", *attrs.genus, provenance::kAttributes)
                            : InvariantReport::unknown("genus"));
  if (k.kind() == KnotExpr::Kind::Cable2 && k.q() > 1) {
    const std::int64_t q = k.q();
    out.push_back(ds_cable(k.child(), cable_k(q), q % 4 == 1 ? 1 : -1));
  }
  return out;
}

}  // namespace knotcalc
