#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace ssym {

/// Residue class in F_p, stored as its representative in [0, p).
struct FpElem {
  std::uint32_t value = 0;

  constexpr bool is_zero() const noexcept { return value == 0; }
  friend constexpr auto operator<=>(FpElem, FpElem) = default;
};

std::ostream& operator<<(std::ostream& os, FpElem e);

/// The prime field F_p for an odd prime p. Construction validates p.
class PrimeField {
 public:
  /// Throws DomainError unless p is an odd prime below 2^16.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  FpElem zero() const noexcept { return {0}; }
  FpElem one() const noexcept { return {1}; }

  /// Reduces an arbitrary signed integer.
  FpElem from_int(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  FpElem add(FpElem a, FpElem b) const noexcept {
    std::uint32_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  FpElem sub(FpElem a, FpElem b) const noexcept {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FpElem neg(FpElem a) const noexcept { return {a.value == 0 ? 0 : p_ - a.value}; }
  FpElem mul(FpElem a, FpElem b) const noexcept {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
  }
  FpElem pow(FpElem a, std::uint64_t e) const noexcept;
  /// Throws DomainError on zero.
  FpElem inv(FpElem a) const;

  /// Signed representative in (-p/2, p/2].
  std::int64_t to_signed(FpElem a) const noexcept {
    return a.value > p_ / 2 ? static_cast<std::int64_t>(a.value) - p_ : a.value;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

}  // namespace ssym
