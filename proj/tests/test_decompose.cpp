#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ssym/checks.hpp"
#include "ssym/decompose.hpp"
#include "ssym/errors.hpp"
#include "ssym/generators.hpp"
#include "ssym/supersym.hpp"
#include "util.hpp"

using namespace ssym;
using testutil::P;

TEST_CASE("factor_core") {
  const Ring R(2, 1, 5);
  const Poly g = P("x1 + x2 + y1", R);
  const auto fc = factor_core(P("x1*x2*y1", R) * g);
  CHECK(fc.a == 1);
  CHECK(fc.b == 1);
  CHECK(fc.cofactor == g);
  const auto xc = factor_core(P("x1^3", Ring(1, 0, 3)));
  CHECK(xc.a == 3);
  CHECK(xc.b == 0);
  CHECK(xc.cofactor == Poly::constant(Ring(1, 0, 3), 1));
  CHECK_THROWS_AS(factor_core(Poly(R)), ZeroPolynomial);
}

TEST_CASE("core_to_generators") {
  CHECK(format_genexpr(core_to_generators(3, 0, Ring(1, 0, 3))) == "EX[1]");
  CHECK(format_genexpr(core_to_generators(1, 2, Ring(1, 1, 3))) == "U[1]");
  CHECK(format_genexpr(core_to_generators(4, 5, Ring(2, 1, 3))) == "EX[2]*EY[1]*U[1]");
  CHECK(format_genexpr(core_to_generators(0, 0, Ring(2, 1, 3))) == "1");
  CHECK_THROWS_AS(core_to_generators(1, 1, Ring(1, 1, 3)), DomainError);
  CHECK_THROWS_AS(core_to_generators(1, 2, Ring(1, 0, 3)), DomainError);
  for (std::uint32_t a = 0; a < 9; ++a)
    for (std::uint32_t b = (3 - a % 3) % 3; b < 9; b += 3) {
      const Ring R(2, 2, 3);
      if (a % 3 && b < 3 - a % 3) continue;
      Poly core = Poly::constant(R, 1);
      for (unsigned i = 1; i <= 2; ++i) core *= pow(Poly::x(R, i), a) * pow(Poly::y(R, i), b);
      CHECK(expand(core_to_generators(a, b, R), R) == core);
    }
}

TEST_CASE("worked decompositions") {
  const Ring R(1, 1, 3);
  const Poly c2 = c_r(2, R);
  const GenExpr e = decompose(c2);
  CHECK(verify_decomposition(c2, e));
  CHECK(format_genexpr(decompose(Poly::constant(R, 1))) == "1");
  CHECK(format_genexpr(decompose(Poly::constant(R, 2))) == "2");
  CHECK(decompose(Poly(R)).is_zero());

  const Poly f = u_k(1, R) * c_r(1, R);
  const GenExpr g = decompose(f);
  CHECK(verify_decomposition(f, g));
  for (const auto& [mono, c] : g.terms()) CHECK(mono.degree(R) == 4);
}

TEST_CASE("verify_decomposition") {
  const Ring R(1, 1, 3);
  CHECK(verify_decomposition(c_r(1, R), parse_genexpr("C[1]", R)));
  CHECK_FALSE(verify_decomposition(c_r(1, R), parse_genexpr("C[2]", R)));
  CHECK_FALSE(verify_decomposition(c_r(1, R), parse_genexpr("C[1]", Ring(1, 2, 3))));
}

TEST_CASE("inputs outside A_s are rejected") {
  const Ring R(1, 1, 3);
  CHECK_THROWS_AS(decompose(P("x1", R)), NotSupersymmetric);
  CHECK_THROWS_AS(decompose(P("x1*y1 + x2", Ring(2, 1, 3))), NotSupersymmetric);
  Decomposer d(R);
  CHECK_THROWS_AS(d.decompose(c_r(1, Ring(1, 2, 3))), RingMismatch);
  CHECK_THROWS_AS(Decomposer(Ring(1, 1, true, PrimeField(3))), DomainError);
}

TEST_CASE("base levels") {
  // m = 0: complete symmetric functions of y with c_r(0|n) = (-1)^r h_r(y)
  const Ring Y(0, 2, 5);
  const Poly f = P("y1^2 + y1*y2 + y2^2 + 3*y1*y2", Y);
  CHECK(verify_decomposition(f, decompose(f)));
  // n = 0: elementary symmetric functions of x
  const Ring X(3, 0, 5);
  const Poly g = P("x1^2 + x2^2 + x3^2", X);
  const GenExpr e = decompose(g);
  CHECK(format_genexpr(e) == "C[1]^2 + 3*C[2]");
}

TEST_CASE("a supersymmetric remainder whose core exponents are not balanced") {
  // l = x1^2 - x1 y1 = C1^2 - C2 vanishes at x1 = 0, its core is x1^1 y1^0 and
  // 1 + 0 is not divisible by 3; the cofactor x1 - y1 is not divisible by x1.
  const Ring R(1, 1, 3);
  const Poly l = P("x1^2 - x1*y1", R);
  REQUIRE(is_supersymmetric(l).overall);
  REQUIRE(set_xm_zero(l).is_zero());
  const auto fc = factor_core(l);
  CHECK(fc.a == 1);
  CHECK(fc.b == 0);
  CHECK((fc.a + fc.b) % 3 != 0);

  Decomposer d(R);
  const GenExpr e = d.decompose(l);
  CHECK(verify_decomposition(l, e));
  REQUIRE(d.stats().cores.size() >= 1);
  CHECK_FALSE(d.stats().cores.front().law_holds);
}

TEST_CASE("v_k decomposes at every level of the small grid") {
  for (std::uint32_t p : {3u, 5u})
    for (unsigned m = 1; m <= 2; ++m)
      for (unsigned n = 1; n <= 2; ++n) {
        Decomposer d(Ring(m, n, p));
        for (unsigned k = 1; k < p; ++k) {
          const Poly v = v_k(KSeq(PrimeField(p), k), Ring(m, n, p));
          CHECK(verify_decomposition(v, d.decompose(v)));
          CHECK(verify_decomposition(v, d.vk_expression(m, k)));
        }
      }
}

TEST_CASE("property: expand, decompose, expand is the identity") {
  std::mt19937_64 rng(51);
  for (std::uint32_t p : {3u, 5u, 7u})
    for (unsigned m = 0; m <= 3; ++m)
      for (unsigned n = 0; n <= 2; ++n) {
        if (m + n > 4) continue;
        const Ring R(m, n, p);
        Decomposer d(R);
        GeneratorPolys cache(R);
        for (int t = 0; t < 30; ++t) {
          const Poly f = expand(checks::random_genexpr(R, 9, rng), cache);
          const GenExpr e = d.decompose(f);
          REQUIRE(expand(e, cache) == f);
        }
        CHECK(d.stats().calls > 0);
      }
}

TEST_CASE("property: non-homogeneous inputs split into components") {
  std::mt19937_64 rng(52);
  const Ring R(2, 2, 3);
  GeneratorPolys cache(R);
  Decomposer d(R);
  for (int t = 0; t < 40; ++t) {
    const Poly f = expand(checks::random_genexpr(R, 8, rng), cache) + expand(checks::random_genexpr(R, 4, rng), cache);
    REQUIRE(expand(d.decompose(f), cache) == f);
  }
}

TEST_CASE("property: cores that are divided out leave supersymmetric cofactors") {
  std::mt19937_64 rng(53);
  const Ring R(2, 1, 5);
  GeneratorPolys cache(R);
  for (int t = 0; t < 60; ++t) {
    const Poly f = expand(checks::random_genexpr(R, 10, rng), cache);
    Decomposer d(R);
    REQUIRE_NOTHROW(d.decompose(f));
    for (const auto& c : d.stats().cores) REQUIRE(c.a > 0);
  }
}
