#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotcalc/errors.hpp"
#include "knotcalc/knots.hpp"
#include "knotcalc/verify.hpp"
#include "oracles.hpp"

using namespace knotcalc;

TEST_CASE("parser builds the expected tree") {
  const KnotExpr k = KnotExpr::parse("cable2(9; sum(K(1),K(2)))");
  CHECK(k == KnotExpr::cable2(9, KnotExpr::sum({KnotExpr::family_k(1), KnotExpr::family_k(2)})));
  CHECK(k.to_string() == "cable2(9;sum(K(1),K(2)))");
  CHECK(KnotExpr::parse("mirror(torus(2,3))").to_string() == "mirror(torus(2,3))");
  CHECK(KnotExpr::parse("  unknot ") == KnotExpr::unknot());
  CHECK(KnotExpr::parse("torus(-2,3)") == KnotExpr::mirror(KnotExpr::torus(2, 3)));
}

TEST_CASE("parser errors carry offsets") {
  CHECK_THROWS_AS(KnotExpr::parse("torus(2,4)"), ConstraintError);
  CHECK_THROWS_AS(KnotExpr::parse("cable2(4;unknot)"), ConstraintError);
  CHECK_THROWS_AS(KnotExpr::parse("torus(-2,-3)"), ConstraintError);
  CHECK_THROWS_AS(KnotExpr::parse("torus(1,3)"), ConstraintError);
  CHECK_THROWS_AS(KnotExpr::parse("torus(2,3,5)"), ParseError);
  CHECK_THROWS_AS(KnotExpr::parse("sum(K(1))"), ParseError);
  CHECK_THROWS_AS(KnotExpr::parse("knot"), ParseError);
  CHECK_THROWS_AS(KnotExpr::parse("K(1) x"), ParseError);
  CHECK_THROWS_AS(KnotExpr::parse("K(99999999999999999999)"), ParseError);
  CHECK_THROWS_AS(KnotExpr::parse(""), ParseError);
  try {
    KnotExpr::parse("sum(K(1),torus(4,6))");
    FAIL("expected an error");
  } catch (const ConstraintError& e) {
    CHECK(std::string(e.what()).find("at byte 9") != std::string::npos);
  }
  try {
    KnotExpr::parse("mirror(K(1)");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 11);
  }
}

TEST_CASE("Alexander polynomials") {
  CHECK(alexander(KnotExpr::unknot()) == SymPoly(Int(1)));
  CHECK(alexander(KnotExpr::torus(2, 5)) == SymPoly::parse("1 - T1 + T2"));
  CHECK(alexander(KnotExpr::torus(5, 2)) == SymPoly::parse("1 - T1 + T2"));
  CHECK(alexander(KnotExpr::torus(3, 4)) == SymPoly::parse("1 - T2 + T3"));
  CHECK(alexander(KnotExpr::family_k(3)) == SymPoly::parse("-5 + 3*T1"));
  CHECK(alexander(KnotExpr::mirror(KnotExpr::torus(2, 3))) == alexander(KnotExpr::torus(2, 3)));
  CHECK(alexander(KnotExpr::cable2(13, KnotExpr::torus(2, 3))) ==
        oracle::naive_mul(SymPoly::parse("-1 + T2"), alexander(KnotExpr::torus(2, 13))));
  // Negative cabling parameter: T(2,-q) is the mirror of T(2,q).
  CHECK(alexander(KnotExpr::cable2(-3, KnotExpr::unknot())) == alexander(KnotExpr::torus(2, 3)));
  CHECK(alexander(KnotExpr::cable2(1, KnotExpr::family_k(2))) == SymPoly::parse("-3 + 2*T2"));
}

TEST_CASE("two torus code paths agree") {
  for (std::int64_t r = 1; r <= 25; ++r) {
    CHECK(alexander_torus_two_strand(r) == alexander_torus_by_division(2, 2 * r + 1));
  }
  for (std::int64_t r = 1; r <= 50; ++r) CHECK(t0(alexander_torus_two_strand(r)) == (r + 1) / 2);
}

TEST_CASE("attributes") {
  const KnotAttributes sum = attributes(KnotExpr::family_sum(2, 1));
  CHECK(sum.genus == Int(2));
  CHECK(sum.is_negative == true);
  CHECK(sum.epsilon == -1);
  CHECK(sum.tau == Int(-2));
  CHECK(sum.bounds_nullhomologous_disk == true);

  const KnotAttributes u = attributes(KnotExpr::unknot());
  CHECK(u.genus == Int(0));
  CHECK(u.tau == Int(0));
  CHECK(u.epsilon == 0);
  CHECK(u.bounds_nullhomologous_disk == true);

  const KnotAttributes m = attributes(KnotExpr::mirror(KnotExpr::torus(2, 3)));
  CHECK(m.tau == Int(-1));
  CHECK(m.epsilon == -1);
  CHECK(m.is_negative == true);

  const KnotAttributes t = attributes(KnotExpr::torus(3, 5));
  CHECK(t.genus == Int(4));
  CHECK(t.tau == Int(4));
  CHECK(t.bounds_nullhomologous_disk == false);

  const KnotAttributes c = attributes(KnotExpr::cable2(5, KnotExpr::torus(2, 3)));
  CHECK_FALSE(c.genus.has_value());
  CHECK_FALSE(c.tau.has_value());
  CHECK_FALSE(c.bounds_nullhomologous_disk.has_value());

  const KnotAttributes zero = attributes(KnotExpr::family_k(0));
  CHECK_FALSE(zero.genus.has_value());
}

TEST_CASE("random trees: round trip and normalization") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const KnotExpr k = verify::random_knot(rng, 4);
    const std::string text = k.to_string();
    const KnotExpr back = KnotExpr::parse(text);
    CHECK(back == k);
    CHECK(back.to_string() == text);
    const SymPoly d = alexander(k);
    CHECK(eval_at_one(d) == 1);
    CHECK(alexander(KnotExpr::mirror(k)) == d);
  }
}
