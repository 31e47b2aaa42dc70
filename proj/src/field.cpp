#include "ssym/field.hpp"

#include <ostream>
#include <string>

#include "ssym/errors.hpp"

namespace ssym {

std::ostream& operator<<(std::ostream& os, FpElem e) { return os << e.value; }

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p == 2 || !is_prime(p) || p >= (1u << 16))
    throw DomainError("characteristic must be an odd prime below 65536, got " + std::to_string(p));
}

FpElem PrimeField::pow(FpElem a, std::uint64_t e) const noexcept {
  FpElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FpElem PrimeField::inv(FpElem a) const {
  if (a.is_zero()) throw DomainError("zero has no inverse in F_p");
  return pow(a, p_ - 2);
}

}  // namespace ssym
