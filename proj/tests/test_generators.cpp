#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ssym/errors.hpp"
#include "ssym/generators.hpp"
#include "ssym/oracle.hpp"
#include "ssym/supersym.hpp"
#include "ssym/symfun.hpp"
#include "util.hpp"

using namespace ssym;
using testutil::P;

TEST_CASE("c_r") {
  CHECK(c_r(0, Ring(2, 3, 5)) == Poly::constant(Ring(2, 3, 5), 1));
  const Ring R(1, 1, 3);
  CHECK(c_r(1, R) == P("x1 - y1", R));
  CHECK(c_r(2, R) == P("y1^2 - x1*y1", R));
  // c_r(m|0) = sigma_r(x)
  const Ring X(3, 0, 5);
  for (unsigned r = 0; r <= 4; ++r) CHECK(c_r(r, X) == elementary(r, Block::X, X));
}

TEST_CASE("c_r restricts to the level below") {
  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned n = 0; n <= 2; ++n)
      for (unsigned r = 0; r <= 5; ++r) CHECK(set_xm_zero(c_r(r, Ring(m, n, 7))) == c_r(r, Ring(m - 1, n, 7)));
}

TEST_CASE("sigma^p") {
  CHECK(sigma_x_p(1, Ring(1, 0, 3)) == P("x1^3", Ring(1, 0, 3)));
  CHECK(sigma_x_p(2, Ring(2, 0, 3)) == P("x1^3*x2^3", Ring(2, 0, 3)));
  CHECK(sigma_y_p(1, Ring(0, 2, 3)) == P("y1^3 + y2^3", Ring(0, 2, 3)));
  CHECK_THROWS_AS(sigma_x_p(3, Ring(2, 1, 3)), DomainError);
  CHECK_THROWS_AS(sigma_y_p(0, Ring(2, 1, 3)), DomainError);
}

TEST_CASE("u_k") {
  CHECK(u_k(1, Ring(1, 1, 3)) == P("x1*y1^2", Ring(1, 1, 3)));
  CHECK(u_k(1, Ring(0, 1, 3)) == P("y1^2", Ring(0, 1, 3)));
  CHECK(u_k(2, Ring(2, 1, 3)) == P("x1^2*x2^2*y1", Ring(2, 1, 3)));
  CHECK_THROWS_AS(u_k(3, Ring(1, 1, 3)), DomainError);
  CHECK_THROWS_AS(u_k(1, Ring(1, 0, 3)), DomainError);
}

TEST_CASE("KSeq values") {
  const KSeq a(PrimeField(3), 1);
  CHECK(a.s() == 1);
  CHECK(a.kvals() == std::vector<std::uint32_t>{1});
  CHECK(a.kp() == 1);
  const KSeq b(PrimeField(5), 3);
  CHECK(b.s() == 2);
  CHECK(b.kvals() == std::vector<std::uint32_t>{3, 1});
  CHECK(b.kp() == 1);
  const KSeq c(PrimeField(7), 2);
  CHECK(c.s() == 1);
  CHECK(c.kvals() == std::vector<std::uint32_t>{2});
  CHECK(c.kp() == 3);
  CHECK_THROWS_AS(KSeq(PrimeField(5), 0), DomainError);
  CHECK_THROWS_AS(KSeq(PrimeField(5), 5), DomainError);
}

TEST_CASE("KSeq relations for every (p, k)") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u})
    for (unsigned k = 1; k < p; ++k) {
      const KSeq ks(PrimeField(p), k);
      const unsigned s = ks.s();
      CHECK(s * (p - k) >= k);
      CHECK((s - 1) * (p - k) < k);
      CHECK(ks.kval(0) == k);
      for (unsigned i = 1; i < s; ++i) CHECK(ks.kval(i - 1) - ks.kval(i) == p - k);
      CHECK(ks.kval(s - 1) + ks.kp() == p - k);
      CHECK(s < p);
    }
}

TEST_CASE("Delta sequences") {
  CHECK_THROWS_AS(DeltaSeq({2, 1}), DomainError);
  CHECK_THROWS_AS(DeltaSeq({0, 1}), DomainError);
  const DeltaSeq d({1, 1, 3});
  CHECK(d.size() == 3);
  CHECK(d.weight() == 5);
  CHECK(d.support() == std::vector<unsigned>{1, 3});
  CHECK(d.without(1) == DeltaSeq({1, 3}));

  CHECK(enumerate_deltas(1, 10) == std::vector<DeltaSeq>{DeltaSeq()});
  CHECK(enumerate_deltas(2, 1) == std::vector<DeltaSeq>{DeltaSeq(), DeltaSeq({1})});
  CHECK(enumerate_deltas(3, 2) == std::vector<DeltaSeq>{DeltaSeq(), DeltaSeq({1}), DeltaSeq({2}), DeltaSeq({1, 1})});
}

TEST_CASE("brackets") {
  const Ring R(2, 1, 3);
  const KSeq ks(R.field, 1);
  const DeltaSeq none;
  CHECK(bracket_round(none, 0, 2, 1, ks, R) == P("x1*x2*y1", R));
  CHECK(bracket_round(none, 1, 2, 1, ks, R).is_zero());

  CHECK(bracket_square(none, 1, 2, 1, ks, R) == P("x1*x2", R));
  CHECK(bracket_square(none, 0, 2, 1, ks, R) == P("x1*x2*y1^2", R));

  CHECK(bracket_brace(none, 1, 0, 2, 1, ks, R) == P("x1*x2^2*y1^2 + x1^2*x2*y1^2", R));
  CHECK(bracket_brace(none, 1, 1, 2, 1, ks, R) == P("x1*x2^2 + x1^2*x2", R));
}

TEST_CASE("brackets vanish outside their index ranges") {
  const Ring R(2, 2, 5);
  const KSeq ks(R.field, 3);  // s = 2
  const DeltaSeq three({1, 1, 1}), two({1, 1});
  CHECK(bracket_round(three, 0, 2, 2, ks, R).is_zero());
  CHECK(bracket_round(DeltaSeq(), 2, 2, 2, ks, R).is_zero());
  CHECK(bracket_round(DeltaSeq(), -1, 2, 2, ks, R).is_zero());
  CHECK(bracket_square(three, 0, 2, 2, ks, R).is_zero());
  CHECK(bracket_square(DeltaSeq(), 3, 2, 2, ks, R).is_zero());
  CHECK(bracket_brace(two, 1, 0, 2, 2, ks, R).is_zero());
  CHECK_FALSE(bracket_brace(DeltaSeq({1}), 1, 0, 2, 2, ks, R).is_zero());
}

TEST_CASE("[empty, 0] at (m-1, n-1) is Sym(x^k) Sym(y^(p-k))") {
  const Ring R(3, 3, 5);
  for (unsigned k = 1; k < 5; ++k) {
    const KSeq ks(R.field, k);
    Poly expect = Poly::constant(R, 1);
    for (unsigned i = 1; i <= 2; ++i) expect *= pow(Poly::x(R, i), k) * pow(Poly::y(R, i), 5 - k);
    CHECK(bracket_square(DeltaSeq(), 0, 2, 2, ks, R) == expect);
  }
}

TEST_CASE("w and v_k worked cases") {
  const Ring A(1, 1, 3), B(2, 1, 3);
  const KSeq ks(A.field, 1);
  CHECK(w_poly(ks, A) == P("x1*y1", A));
  CHECK(w_poly(ks, B) == P("x1*x2*y1", B));

  const Poly va = v_k(ks, A);
  CHECK(va == P("-x1*y1 + y1^2", A));
  CHECK(psi(va).is_zero());
  CHECK(set_xm_zero(va) == P("y1^2", Ring(0, 1, 3)));

  const Poly vb = v_k(ks, B);
  CHECK(vb == P("-x1*x2*y1 + x1*y1^2 + x2*y1^2", B));
  CHECK(psi(vb) == P("T^3", B.psi_target()));
  CHECK(d_dT(psi(vb)).is_zero());
  CHECK(set_xm_zero(vb) == u_k(1, Ring(1, 1, 3)));
  CHECK(vb.degree() == 3);
  CHECK_THROWS_AS(v_k(ks, Ring(0, 1, 3)), DomainError);
}

TEST_CASE("v_k contract for k = p - 1, where k_p = 0") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u})
    for (unsigned m = 1; m <= 3; ++m)
      for (unsigned n = 1; n <= 2; ++n) {
        const Ring R(m, n, p);
        const KSeq ks(R.field, p - 1);
        REQUIRE(ks.kp() == 0);
        const Poly v = v_k(ks, R);
        CHECK(is_supersymmetric(v).overall);
        CHECK(v.degree() == std::uint64_t{m - 1} * (p - 1) + n);
        CHECK(set_xm_zero(v) == u_k(p - 1, Ring(m - 1, n, p)));
      }
}

TEST_CASE("property: every bracket is symmetric in both blocks") {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (unsigned k = 1; k < p; ++k) {
      const Ring R(3, 2, p);
      const KSeq ks(R.field, k);
      for (const auto& D : enumerate_deltas(ks.s(), ks.s() * ks.s()))
        for (int j = 0; j <= 2; ++j) {
          const Poly r = bracket_round(D, j, 3, 2, ks, R), q = bracket_square(D, j, 3, 2, ks, R);
          REQUIRE((is_symmetric(r, Block::X) && is_symmetric(r, Block::Y)));
          REQUIRE((is_symmetric(q, Block::X) && is_symmetric(q, Block::Y)));
          for (unsigned l = 1; l <= ks.s() + 1; ++l) {
            const Poly b = bracket_brace(D, l, j, 3, 2, ks, R);
            REQUIRE((is_symmetric(b, Block::X) && is_symmetric(b, Block::Y)));
          }
        }
    }
}

TEST_CASE("psi(w) check is sensitive to a sign error in w") {
  const Ring R(2, 2, 5);
  for (unsigned k = 1; k < 5; ++k) {
    const KSeq ks(R.field, k);
    const Poly w = w_poly(ks, R);
    CHECK(psi_w_check(w, ks));
    CHECK_FALSE(psi_w_check(-w, ks));
  }
}
