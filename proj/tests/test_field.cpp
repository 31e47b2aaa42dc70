#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ssym/errors.hpp"
#include "ssym/field.hpp"

using namespace ssym;

TEST_CASE("construction validates an odd prime") {
  CHECK_NOTHROW(PrimeField(3));
  CHECK_NOTHROW(PrimeField(65521));
  CHECK_THROWS_AS(PrimeField(2), DomainError);
  CHECK_THROWS_AS(PrimeField(9), DomainError);
  CHECK_THROWS_AS(PrimeField(1), DomainError);
  CHECK_THROWS_AS(PrimeField(65537), DomainError);
}

TEST_CASE("residue arithmetic") {
  const PrimeField F(7);
  CHECK(F.from_int(-1).value == 6);
  CHECK(F.from_int(15).value == 1);
  CHECK(F.add(F.from_int(5), F.from_int(4)).value == 2);
  CHECK(F.sub(F.from_int(2), F.from_int(5)).value == 4);
  CHECK(F.neg(F.zero()).value == 0);
  CHECK(F.mul(F.from_int(3), F.from_int(5)).value == 1);
  CHECK(F.pow(F.from_int(3), 6).value == 1);
  CHECK(F.to_signed(F.from_int(6)) == -1);
  CHECK(F.to_signed(F.from_int(3)) == 3);
  CHECK_THROWS_AS(F.inv(F.zero()), DomainError);
}

TEST_CASE("every nonzero residue has an inverse") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 101u}) {
    const PrimeField F(p);
    for (std::uint32_t a = 1; a < p; ++a) CHECK(F.mul(FpElem{a}, F.inv(FpElem{a})) == F.one());
  }
}

TEST_CASE("Fermat: a^p = a") {
  const PrimeField F(13);
  for (std::uint32_t a = 0; a < 13; ++a) CHECK(F.pow(FpElem{a}, 13) == FpElem{a});
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(0));
}
