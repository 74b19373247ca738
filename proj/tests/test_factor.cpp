#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotcalc/errors.hpp"
#include "knotcalc/factor.hpp"
#include "knotcalc/polynomial.hpp"
#include "oracles.hpp"

using namespace knotcalc;

namespace {

IntPoly poly(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}

IntPoly power(const IntPoly& p, int e) {
  IntPoly out = poly({1});
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

IntPoly rebuild(const Factorization& f) {
  IntPoly out = poly({1});
  for (const auto& [g, e] : f.factors) out = out * power(g, e);
  return f.unit * out;
}

}  // namespace

TEST_CASE("IntPoly basics") {
  const IntPoly p = poly({2, -3, 2});
  CHECK(p.degree() == 2);
  CHECK(p.reciprocal() == p);
  CHECK(poly({1, 2}).reciprocal() == poly({2, 1}));
  CHECK(p.evaluate(1) == 1);
  CHECK(poly({0, 0, 1, 1}).low_order() == 2);
  CHECK(poly({4, 6}).content() == 2);
  CHECK(poly({-4, -6}).primitive_part() == poly({2, 3}));
  const auto [q, ok] = divide_exact(poly({-1, 0, 1}), poly({1, 1}));
  CHECK(ok);
  CHECK(q == poly({-1, 1}));
  CHECK_FALSE(divide_exact(poly({1, 0, 1}), poly({1, 1})).second);
  CHECK(gcd(poly({-1, 0, 1}), poly({1, 2, 1})) == poly({1, 1}));
}

TEST_CASE("monomialize and symmetrize are inverse") {
  const SymPoly f = SymPoly::parse("1 - T1 + T2");
  CHECK(monomialize(f) == poly({1, -1, 1, -1, 1}));
  CHECK(symmetrize(monomialize(f)) == f);
  CHECK(symmetrize(poly({0, 0, 1, -1, 1})) == SymPoly::parse("-1 + T1"));
  CHECK_THROWS_AS(symmetrize(poly({1, 2})), InternalError);
}

TEST_CASE("known factorizations") {
  const Factorization f = factor(poly({1, -1, 1}) * poly({2, -3, 2}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.unit == 1);
  CHECK(f.factors[0] == std::pair{poly({1, -1, 1}), 1});
  CHECK(f.factors[1] == std::pair{poly({2, -3, 2}), 1});

  const Factorization g = factor(-6 * power(poly({1, 1}), 3) * poly({0, 1}) * poly({1, 0, 1}));
  CHECK(g.unit == -6);
  CHECK(rebuild(g) == -6 * power(poly({1, 1}), 3) * poly({0, 1}) * poly({1, 0, 1}));

  // x^4 + 1 is irreducible over Z but splits modulo every prime.
  const Factorization h = factor(poly({1, 0, 0, 0, 1}));
  CHECK(h.factors.size() == 1);
  CHECK_THROWS_AS(factor(IntPoly()), ConstraintError);
}

TEST_CASE("random products factor back into Kronecker-irreducible pieces") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> coeff(-4, 4), deg(1, 3), count(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly p = poly({1});
    const int parts = count(rng);
    for (int i = 0; i < parts; ++i) {
      std::vector<Int> c(deg(rng) + 1);
      for (auto& x : c) x = coeff(rng);
      if (c.back() == 0) c.back() = 1;
      if (c.front() == 0) c.front() = -1;
      p = p * IntPoly(c);
    }
    const Factorization f = factor(p);
    CHECK(rebuild(f) == p);
    for (const auto& [g, e] : f.factors) {
      CHECK(g.leading() > 0);
      CHECK(g.content() == 1);
      CHECK_FALSE(oracle::kronecker_reducible(g));
    }
  }
}

TEST_CASE("t^24 - 1 splits into the eight cyclotomic factors") {
  std::vector<Int> c(25);
  c[0] = -1;
  c[24] = 1;
  const IntPoly p(c);
  const Factorization f = factor(p);
  CHECK(f.factors.size() == 8);
  CHECK(rebuild(f) == p);
  int total = 0;
  for (const auto& [g, e] : f.factors) {
    CHECK(e == 1);
    total += g.degree();
    CHECK_FALSE(oracle::kronecker_reducible(g));
  }
  CHECK(total == 24);
}

TEST_CASE("degree 25 product with repeated and reciprocal factors") {
  const IntPoly a = poly({2, -3, 2}), b = poly({1, -1, 1}), c = poly({3, 1, 0, 2}), d = c.reciprocal();
  const IntPoly p = power(a, 2) * power(b, 3) * c * d * poly({1, 0, 1, 0, 1}) * poly({-1, 1, 0, 0, 0, 1});
  REQUIRE(p.degree() == 25);
  const Factorization f = factor(p);
  CHECK(rebuild(f) == p);
  for (const auto& [g, e] : f.factors) {
    if (g == a) CHECK(e == 2);
    // t^4 + t^2 + 1 and t^5 + t - 1 each contribute one more t^2 - t + 1.
    if (g == b) CHECK(e == 5);
  }
}
