// knotcalc: command-line front end for the knotcalc library.
//
// Exit codes: 0 ok, 2 parse/usage error, 3 constraint error, 4 verification
// failure, 1 anything else (I/O).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "knotcalc/errors.hpp"
#include "knotcalc/invariants.hpp"
#include "knotcalc/knots.hpp"
#include "knotcalc/lattice.hpp"
#include "knotcalc/verify.hpp"

namespace {

using namespace knotcalc;

constexpr int kExitParse = 2;
constexpr int kExitConstraint = 3;
constexpr int kExitVerify = 4;

constexpr std::string_view kLatticeScope =
    "form-level conditions only: evenness, definiteness and inertia are checked; "
    "homological conditions on the filling are not";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool g_json = false;

void emit(const InvariantReport& r) { std::cout << (g_json ? r.to_json() : r.render()) << '\n'; }

void emit_all(const std::vector<InvariantReport>& reports) {
  for (const auto& r : reports) emit(r);
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError(0, "empty entry in integer list '" + text + "'");
    Int v;
    if (v.set_str(item.substr(first, last - first + 1), 10) != 0) {
      throw ParseError(0, "not an integer: '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ParseError(0, "empty integer list");
  return out;
}

struct MatrixSource {
  std::string matrix;
  std::string file;
  std::string builtin;
  std::size_t copies = 1;
  std::string diag;

  IntLattice load() const {
    const int given = !matrix.empty() + !file.empty() + !builtin.empty() + !diag.empty();
    if (given != 1) throw ConstraintError("give exactly one of --matrix, --file, --builtin, --diag");
    if (!matrix.empty()) return IntLattice::parse(matrix);
    if (!diag.empty()) return IntLattice::diagonal(parse_int_list(diag));
    if (!builtin.empty()) return IntLattice::repeat(IntLattice::negative_e8(), copies);
    std::ifstream in(file);
    if (!in) throw IoError("cannot read " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    return IntLattice::parse(buf.str());
  }
};

int run_verify(const std::string& suite, std::uint64_t seed, bool verbose) {
  const verify::SuiteReport report = verify::run_suite(suite, seed);
  for (const auto& c : report.checks) {
    if (g_json) {
      nlohmann::ordered_json j;
      j["id"] = c.id;
      j["passed"] = c.passed;
      j["provenance"] = c.provenance;
      j["detail"] = c.detail;
      std::cout << j.dump() << '\n';
    } else if (verbose || !c.passed) {
      std::cout << c.render() << '\n';
    }
  }
  const std::size_t failed = report.checks.size() - report.passed();
  if (g_json) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["checks"] = report.checks.size();
    j["passed"] = report.passed();
    std::cout << j.dump() << '\n';
  } else if (failed == 0) {
    std::cout << report.passed() << " checks passed\n";
  } else {
    std::cout << failed << " of " << report.checks.size() << " checks failed (seed " << report.seed << ")\n";
  }
  return failed == 0 ? 0 : kExitVerify;
}

int run_lattice(const std::string& sub, const MatrixSource& src, std::int32_t radius, std::size_t max_rank,
                const std::string& vector_text) {
  const IntLattice L = src.load();
  const std::string_view scope_prov = "lattice checks";
  if (sub == "definiteness") {
    emit(InvariantReport::symbolic("definiteness", std::string(to_string(definiteness(L))), scope_prov));
  } else if (sub == "signature") {
    const Inertia in = signature(L);
    emit(InvariantReport::exact("beta_plus", to_int(static_cast<std::int64_t>(in.beta_plus)), scope_prov));
    emit(InvariantReport::exact("beta_minus", to_int(static_cast<std::int64_t>(in.beta_minus)), scope_prov));
    emit(InvariantReport::exact("sigma", to_int(in.sigma), scope_prov));
  } else if (sub == "even") {
    emit(InvariantReport::symbolic("even", is_even(L) ? "true" : "false", scope_prov));
    emit(InvariantReport::symbolic("scope", std::string(kLatticeScope), scope_prov));
  } else if (sub == "bound") {
    const DBound d = os_d_lower_bound(L, {radius, max_rank});
    std::string maximizer = "(";
    for (std::size_t i = 0; i < d.maximizer.size(); ++i) maximizer += (i ? "," : "") + d.maximizer[i].get_str();
    maximizer += ")";
    emit(InvariantReport::symbolic("d_lower_bound", d.bound.get_str(), "max (Q(xi,xi) + rank) / 4"));
    emit(InvariantReport::exact("best_square", d.best_square, scope_prov));
    emit(InvariantReport::symbolic("maximizer", maximizer, scope_prov));
    emit(InvariantReport::symbolic("attained_inside", d.attained_inside ? "true" : "false", scope_prov));
    emit(InvariantReport::exact("vectors_checked", to_int(static_cast<std::int64_t>(d.vectors_checked)), scope_prov));
    emit(InvariantReport::symbolic("scope", std::string(kLatticeScope), scope_prov));
  } else if (sub == "char") {
    if (vector_text.empty()) throw ConstraintError("lattice char needs --vector");
    const std::vector<Int> v = parse_int_list(vector_text);
    emit(InvariantReport::symbolic("characteristic", is_characteristic(L, v) ? "true" : "false", scope_prov));
    emit(InvariantReport::exact("square", L.form(v, v), scope_prov));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotcalc: concordance invariants of 2-strand cables and integral lattice checks"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "Line-delimited JSON records instead of text");

  std::string expr, expr2, poly, suite = "all", sub, vector_text;
  std::optional<std::int64_t> q, assume_lens;
  std::int64_t a = 0, b = 0, n = 1;
  std::uint64_t seed = verify::kDefaultSeed;
  bool verbose = false;
  MatrixSource src;
  std::int32_t radius = 3;
  std::size_t max_rank = 12;

  auto* alexander_cmd = app.add_subcommand("alexander", "Normalized Alexander polynomial");
  alexander_cmd->add_option("expr", expr, "Knot expression")->required();

  auto* invariants_cmd = app.add_subcommand("invariants", "Every available invariant report");
  invariants_cmd->add_option("expr", expr, "Knot expression")->required();
  invariants_cmd->add_option("--assume-lens", assume_lens, "Assert that this surgery slope yields a lens space");

  auto* casson_cmd = app.add_subcommand("casson", "Casson invariant of +1 surgery");
  casson_cmd->add_option("expr", expr, "Knot expression")->required();

  auto* tau_cmd = app.add_subcommand("tau", "tau of the (2,q)-cable");
  tau_cmd->add_option("expr", expr, "Companion knot expression")->required();
  tau_cmd->add_option("--q", q, "Odd cabling parameter")->required();

  auto* d1_cmd = app.add_subcommand("d1", "d1 of +1 surgery");
  d1_cmd->add_option("expr", expr, "Knot expression (the companion when --q is given)")->required();
  d1_cmd->add_option("--q", q, "Take the (2,q)-cable of the expression first");

  auto* witness_cmd = app.add_subcommand("witness", "Knot with |d1| = a and 2|tau| = b");
  witness_cmd->add_option("--a", a, "Even, a > b")->required();
  witness_cmd->add_option("--b", b, "Even, b >= 0")->required();
  witness_cmd->add_option("--n", n, "Family index, n >= 1");

  auto* fm_cmd = app.add_subcommand("foxmilnor", "Is Delta (or Delta1 * Delta2) of the form +-t^j g(t) g(1/t)?");
  fm_cmd->add_option("expr", expr, "Knot expression");
  fm_cmd->add_option("expr2", expr2, "Second knot expression (checks the connected sum with its mirror)");
  fm_cmd->add_option("--poly", poly, "Symmetric polynomial instead of a knot");

  auto* lattice_cmd = app.add_subcommand("lattice", "Integral lattice checks");
  lattice_cmd->add_option("subcommand", sub, "definiteness|signature|even|bound|char")
      ->required()
      ->check(CLI::IsMember({"definiteness", "signature", "even", "bound", "char"}));
  lattice_cmd->add_option("--matrix", src.matrix, "Inline matrix [[a,b],[b,c]]");
  lattice_cmd->add_option("--file", src.file, "Matrix file: n, then n rows of n integers");
  lattice_cmd->add_option("--builtin", src.builtin, "Built-in form")->check(CLI::IsMember({"neg-e8"}));
  lattice_cmd->add_option("--copies", src.copies, "Direct-sum copies of the built-in form")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  lattice_cmd->add_option("--diag", src.diag, "Diagonal form a,b,c,...");
  lattice_cmd->add_option("--radius", radius, "Box radius for the bound search")->check(CLI::Range(1, 1000));
  lattice_cmd->add_option("--max-rank", max_rank, "Refuse to enumerate above this rank");
  lattice_cmd->add_option("--vector", vector_text, "Vector x1,x2,... for char");

  auto* verify_cmd = app.add_subcommand("verify", "Replay the built-in check suites");
  verify_cmd->add_option("--suite", suite, "sympoly|prop-prop|casson|witness|lattice|all")
      ->check(CLI::IsMember(std::vector<std::string>(verify::suite_names().begin(), verify::suite_names().end())));
  verify_cmd->add_option("--seed", seed, "Seed for randomized checks");
  verify_cmd->add_flag("--verbose,-v", verbose, "List passing checks too");

  auto* parse_cmd = app.add_subcommand("parse", "Parse and print an expression in canonical form");
  parse_cmd->add_option("expr", expr, "Knot expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*alexander_cmd) {
      const SymPoly d = alexander(KnotExpr::parse(expr));
      emit(InvariantReport::symbolic("alexander", d.to_tbasis_string(), provenance::kAlexander));
      emit(InvariantReport::symbolic("alexander_monomial", d.to_monomial_string(), provenance::kAlexander));
    } else if (*invariants_cmd) {
      emit_all(report_all(KnotExpr::parse(expr), assume_lens));
    } else if (*casson_cmd) {
      emit(InvariantReport::exact("casson_s3_plus1", casson_plus_one(SurgeryDesc(KnotExpr::parse(expr), 1)),
                                  provenance::kCasson));
    } else if (*tau_cmd) {
      emit(tau_cable_two_strand(KnotExpr::parse(expr), *q));
    } else if (*d1_cmd) {
      const KnotExpr k = KnotExpr::parse(expr);
      if (q) {
        emit(d1_cable_two_strand(k, *q));
      } else {
        for (const auto& r : report_all(k)) {
          if (r.name == "d1") emit(r);
        }
      }
    } else if (*witness_cmd) {
      const Theorem2Witness w = theorem2_witness(a, b, n);
      emit(InvariantReport::symbolic("knot", w.knot.to_string(), provenance::kTheorem2));
      emit(w.d1);
      emit(w.tau);
    } else if (*fm_cmd) {
      SymPoly f;
      if (!poly.empty()) {
        if (!expr.empty()) throw ConstraintError("give either --poly or knot expressions, not both");
        f = SymPoly::parse(poly);
      } else {
        if (expr.empty()) throw ConstraintError("foxmilnor needs an expression or --poly");
        f = alexander(KnotExpr::parse(expr));
        if (!expr2.empty()) f = f * alexander(KnotExpr::parse(expr2));
      }
      const FoxMilnorResult r = fox_milnor_check(f);
      if (r == FoxMilnorResult::Undecided) {
        emit(InvariantReport::unknown("fox_milnor"));
      } else {
        emit(InvariantReport::symbolic("fox_milnor", std::string(to_string(r)), provenance::kFoxMilnor));
      }
    } else if (*lattice_cmd) {
      return run_lattice(sub, src, radius, max_rank, vector_text);
    } else if (*verify_cmd) {
      return run_verify(suite, seed, verbose);
    } else if (*parse_cmd) {
      emit(InvariantReport::symbolic("expr", KnotExpr::parse(expr).to_string(), "knot expression grammar"));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ConstraintError& e) {
    std::cerr << "constraint error: " << e.what() << '\n';
    return kExitConstraint;
  } catch (const InternalError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
