#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "knotcalc/integer.hpp"
#include "knotcalc/knots.hpp"
#include "knotcalc/sympoly.hpp"

namespace knotcalc {

/// Provenance tags attached to reports. d1 is only ever reported exact under
/// kTheorem1Equality, kLensSurgery or kTorusValue.
namespace provenance {
inline constexpr std::string_view kTheorem1Equality = "Theorem 1 equality";
inline constexpr std::string_view kTheorem1Inequality = "Theorem 1 inequality";
inline constexpr std::string_view kLensSurgery = "Proposition 2 lens-space formula d1 = -2 t0(Delta)";
inline constexpr std::string_view kTorusValue = "torus-knot value d1(T(2,4k+-1)) = -2k";
inline constexpr std::string_view kSkein = "skein inequality -2 <= d1(K(2,q)) <= 0 for q <= 1";
inline constexpr std::string_view kHomCabling = "Hom cabling theorem";
inline constexpr std::string_view kCorollary1 = "Corollary 1 ds(S^3_1(K(2,4k+-1))) = k";
inline constexpr std::string_view kCasson = "Casson surgery formula lambda(S^3_1(K)) = Delta''(1)/2";
inline constexpr std::string_view kAttributes = "knot attribute table";
inline constexpr std::string_view kAlexander = "Alexander polynomial rules";
inline constexpr std::string_view kT0 = "t0 functional";
inline constexpr std::string_view kTheorem2 = "Theorem 2 witness family";
inline constexpr std::string_view kFoxMilnor = "Fox-Milnor condition";
}  // namespace provenance

enum class Status { Exact, UpperBound, Interval, Unknown };

std::string_view to_string(Status s);

/// One named invariant value. Exact values are single integers (or, for
/// polynomial-valued invariants, their T-basis text); upper bounds carry the
/// bound; intervals carry [lo, hi].
struct InvariantReport {
  using Value = std::variant<std::monostate, Int, std::pair<Int, Int>, std::string>;

  std::string name;
  Status status = Status::Unknown;
  Value value;
  std::string provenance;

  static InvariantReport exact(std::string name, Int v, std::string_view prov);
  static InvariantReport symbolic(std::string name, std::string text, std::string_view prov);
  static InvariantReport upper_bound(std::string name, Int v, std::string_view prov);
  static InvariantReport interval(std::string name, Int lo, Int hi, std::string_view prov);
  static InvariantReport unknown(std::string name);

  /// The single integer carried by exact / upper-bound reports.
  const Int& integer() const;

  /// "d1 = -2 (exact; Theorem 1 equality)"
  std::string render() const;
  /// One-line JSON record: {"name", "status", "value" | "lo","hi", "provenance"}.
  std::string to_json() const;
};

/// A knot together with an integer surgery slope.
struct SurgeryDesc {
  SurgeryDesc(KnotExpr k, std::int64_t s);
  KnotExpr knot;
  std::int64_t slope;
};

/// lambda(S^3_1(K)) = Delta''_K(1) / 2. Slope must be +1.
Int casson_plus_one(const SurgeryDesc& s);

/// True when (knot, slope) is a known lens-space surgery: the unknot at any
/// positive slope, T(p,q) at pq +- 1, and cable2(2pq+-1; T(p,q)) at 4pq +- 1.
bool is_known_lens_surgery(const SurgeryDesc& s);

/// d1 = -2 t0(Delta) for lens-space surgeries (whitelisted or asserted by
/// the caller). Non-positive slopes always give unknown.
InvariantReport d1_lens(const SurgeryDesc& s, bool assume_lens);

/// d1(T(2,q)) = -2 ceil(r/2), q = 2r+1 odd and > 1.
InvariantReport d1_torus_two_strand(std::int64_t q);

/// d1 of the (2,q)-cable of k, q odd.
InvariantReport d1_cable_two_strand(const KnotExpr& k, std::int64_t q);

/// tau of the (2,q)-cable of k via Hom's cabling formula, q odd.
InvariantReport tau_cable_two_strand(const KnotExpr& k, std::int64_t q);

/// ds(S^3_1(k_{2,4k+sign})); exact k when k bounds the null-homologous disk.
InvariantReport ds_cable(const KnotExpr& knot, std::int64_t k, int sign);

struct Theorem2Witness {
  KnotExpr knot;
  InvariantReport d1;
  InvariantReport tau;
};

/// A knot with |d1| = a and 2|tau| = b, for even a > b >= 0 and n >= 1.
/// Distinct n give non-concordant knots.
Theorem2Witness theorem2_witness(std::int64_t a, std::int64_t b, std::int64_t n);

enum class FoxMilnorResult { IsFMForm, NotFMForm, Undecided };

std::string_view to_string(FoxMilnorResult r);

inline constexpr int kDefaultFactorDegreeBound = 24;

/// Decides whether f = +-t^j g(t) g(1/t) for some g in Z[t]. Requires
/// f(1) = +-1. Monomialized degree above `max_degree` yields Undecided.
FoxMilnorResult fox_milnor_check(const SymPoly& f, int max_degree = kDefaultFactorDegreeBound);

/// Every invariant the library can say something about for `k`, in a fixed
/// order. `lens_slope` asserts that this slope gives a lens space.
std::vector<InvariantReport> report_all(const KnotExpr& k, std::optional<std::int64_t> lens_slope = std::nullopt);

}  // namespace knotcalc
