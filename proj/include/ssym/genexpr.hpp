#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ssym/poly.hpp"

namespace ssym {

/// Generator families of A_ns(m|n):
///   C[r]  = c_r(m|n)          degree r
///   EX[i] = sigma_i(x)^p      degree p*i,   1 <= i <= m
///   EY[j] = sigma_j(y)^p      degree p*j,   1 <= j <= n
///   U[k]  = u_k(m|n)          degree m*k + n*(p-k),  0 < k < p, n >= 1
enum class GenKind { C, EX, EY, U };

struct GenSymbol {
  GenKind kind;
  unsigned index;
  friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;
};

/// Weighted degree of a symbol at the given level (m, n, p) = (ring.m, ring.n, ring.p()).
std::uint64_t symbol_degree(const GenSymbol& s, const Ring& level);
/// Throws DomainError when the symbol does not exist at this level.
void validate_symbol(const GenSymbol& s, const Ring& level);
std::string symbol_name(const GenSymbol& s);

/// Product of generator symbols with positive exponents, sorted by symbol.
class GenMonomial {
 public:
  using Factor = std::pair<GenSymbol, std::uint32_t>;

  GenMonomial() = default;
  explicit GenMonomial(GenSymbol s, std::uint32_t e = 1);
  /// Merges repeated symbols and drops zero exponents.
  static GenMonomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint64_t degree(const Ring& level) const;

  GenMonomial operator*(const GenMonomial& other) const;

  friend bool operator==(const GenMonomial&, const GenMonomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Higher weighted degree first; ties broken by the larger exponent on the
/// first symbol (in C < EX < EY < U, then index order) where the two differ.
class GenOrder {
 public:
  explicit GenOrder(Ring level) : level_(std::move(level)) {}
  bool operator()(const GenMonomial& a, const GenMonomial& b) const;

 private:
  Ring level_;
};

/// Formal polynomial over F_p in the generator symbols of one level (m, n, p).
/// Not a normal form: the generators satisfy relations, so two different
/// expressions may expand to the same polynomial.
class GenExpr {
 public:
  using TermMap = std::map<GenMonomial, FpElem, GenOrder>;

  explicit GenExpr(Ring level) : level_(level), terms_(GenOrder(std::move(level))) {}

  static GenExpr constant(const Ring& level, FpElem c);
  static GenExpr symbol(const Ring& level, GenSymbol s, std::uint32_t e = 1);

  const Ring& level() const noexcept { return level_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const GenMonomial& mono, FpElem c);
  GenExpr& operator+=(const GenExpr& other);
  GenExpr& operator*=(FpElem c);
  friend GenExpr operator+(GenExpr a, const GenExpr& b) { return a += b; }
  friend GenExpr operator*(const GenExpr& a, const GenExpr& b);
  friend GenExpr operator*(GenExpr a, FpElem c) { return a *= c; }

  friend bool operator==(const GenExpr& a, const GenExpr& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
  }

 private:
  Ring level_;
  TermMap terms_;
};

GenExpr pow(const GenExpr& e, std::uint64_t k);

/// Canonical text such as `2*C[3]*EX[1]^2 + EY[2]*U[1]`; zero prints as `0`.
std::string format_genexpr(const GenExpr& e);

/// Inverse of format_genexpr; also accepts '-' between terms and whitespace.
GenExpr parse_genexpr(std::string_view text, const Ring& level);

/// Memoized concrete polynomials for the generator symbols of one level.
class GeneratorPolys {
 public:
  explicit GeneratorPolys(Ring level) : level_(std::move(level)) {}

  const Ring& level() const noexcept { return level_; }
  const Poly& symbol(const GenSymbol& s);
  const Poly& power(const GenSymbol& s, std::uint32_t e);
  Poly monomial(const GenMonomial& m);

 private:
  Ring level_;
  std::map<GenSymbol, std::vector<Poly>> powers_;
};

/// Substitutes the generator polynomials and expands. Throws RingMismatch when
/// the expression's level differs from `ring` (ignoring the T flag is not allowed).
Poly expand(const GenExpr& e, const Ring& ring);
Poly expand(const GenExpr& e, GeneratorPolys& cache);

}  // namespace ssym
