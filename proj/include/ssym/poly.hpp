#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ssym/field.hpp"

namespace ssym {

/// Variable layout x_1..x_m, y_1..y_n and an optional auxiliary T, over F_p.
/// Variables are stored in that order; polynomials combine only over equal rings.
struct Ring {
  unsigned m = 0;
  unsigned n = 0;
  bool has_t = false;
  PrimeField field;

  Ring(unsigned m_, unsigned n_, bool has_t_, PrimeField f) : m(m_), n(n_), has_t(has_t_), field(f) {}
  Ring(unsigned m_, unsigned n_, std::uint32_t p) : Ring(m_, n_, false, PrimeField(p)) {}

  std::uint32_t p() const noexcept { return field.characteristic(); }
  std::size_t nvars() const noexcept { return m + n + (has_t ? 1 : 0); }
  /// Slot of x_i / y_j (1-based indices) and of T.
  std::size_t x_slot(unsigned i) const noexcept { return i - 1; }
  std::size_t y_slot(unsigned j) const noexcept { return m + j - 1; }
  std::size_t t_slot() const noexcept { return m + n; }

  /// Target ring of psi: (m-1, n-1) plus T.
  Ring psi_target() const { return Ring(m - 1, n - 1, true, field); }

  friend bool operator==(const Ring&, const Ring&) = default;
};

/// Exponent vector laid out as in Ring; caches the total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }
  std::uint32_t operator[](std::size_t slot) const noexcept { return exps_[slot]; }
  std::size_t size() const noexcept { return exps_.size(); }
  std::uint64_t degree() const noexcept { return deg_; }

  void set(std::size_t slot, std::uint32_t e) noexcept;

  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) in reverse: other must divide *this.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
  std::uint64_t deg_ = 0;
};

/// Graded lexicographic, descending: higher total degree first, ties broken by
/// lexicographically larger exponent vector (x, then y, then T).
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse polynomial over F_p in the variables of its Ring. Terms are kept in
/// canonical graded-lex descending order and no stored coefficient is zero.
class Poly {
 public:
  using TermMap = std::map<Monomial, FpElem, GrlexDescending>;

  explicit Poly(Ring ring) : ring_(std::move(ring)) {}

  static Poly constant(const Ring& ring, FpElem c);
  static Poly constant(const Ring& ring, std::int64_t c) { return constant(ring, ring.field.from_int(c)); }
  static Poly term(const Ring& ring, Monomial mono, FpElem c);
  static Poly x(const Ring& ring, unsigned i);
  static Poly y(const Ring& ring, unsigned j);
  static Poly t(const Ring& ring);

  const Ring& ring() const noexcept { return ring_; }
  const PrimeField& field() const noexcept { return ring_.field; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  /// Coefficient of a monomial (zero when absent).
  FpElem coeff(const Monomial& mono) const;
  /// First term in canonical order. Requires a nonzero polynomial.
  const std::pair<const Monomial, FpElem>& leading_term() const;
  /// Total degree; empty for the zero polynomial.
  std::optional<std::uint64_t> degree() const;
  bool is_homogeneous() const noexcept;

  /// this += c * mono * g
  void add_scaled(FpElem c, const Poly& g, const Monomial* mono = nullptr);
  void add_term(const Monomial& mono, FpElem c);

  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Poly& g);
  Poly& operator*=(FpElem c);

  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator*(Poly f, FpElem c) { return f *= c; }
  friend Poly operator*(FpElem c, Poly f) { return f *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& f, const Poly& g) { return f.ring_ == g.ring_ && f.terms_ == g.terms_; }

 private:
  Ring ring_;
  TermMap terms_;
};

Poly pow(const Poly& f, std::uint64_t e);

/// Ring morphism sending the i-th variable of f's ring (storage order) to images[i].
Poly substitute(const Poly& f, const Ring& target, std::span<const Poly> images);

/// f(x_1..x_{m-1}, T, y_1..y_{n-1}, T): x_m and y_n both replaced by T.
Poly psi(const Poly& f);

/// Formal derivative in T.
Poly d_dT(const Poly& g);

/// Drops every term containing x_m and re-houses the rest over (m-1, n).
Poly set_xm_zero(const Poly& f);

/// Divides every term by d; throws DivisibilityError if some term is not divisible.
Poly exact_monomial_div(const Poly& f, const Monomial& d);

/// Homogeneous pieces in increasing degree order; empty for the zero polynomial.
std::vector<std::pair<std::uint64_t, Poly>> homogeneous_components(const Poly& f);

/// Multiplies T^e into every term (ring must have T).
Poly times_t_power(const Poly& g, std::uint32_t e);

/// Copy of f in a ring with the same (m, n) and an added T.
Poly with_t(const Poly& f);

}  // namespace ssym
