#pragma once

#include <cstdint>
#include <vector>

#include "ssym/poly.hpp"

namespace ssym {

/// c_r(m|n) = sum_{0 <= i <= min(r,m)} (-1)^(r-i) sigma_i(x) h_(r-i)(y), over the ring's (m, n).
Poly c_r(unsigned r, const Ring& ring);

/// sigma_i(x_1..x_m)^p; requires 1 <= i <= m.
Poly sigma_x_p(unsigned i, const Ring& ring);
/// sigma_j(y_1..y_n)^p; requires 1 <= j <= n.
Poly sigma_y_p(unsigned j, const Ring& ring);

/// u_k(m|n) = (x_1...x_m)^k (y_1...y_n)^(p-k); requires 0 < k < p and n >= 1.
Poly u_k(unsigned k, const Ring& ring);

/// The integers attached to a fixed 0 < k < p by the lift construction:
///   s   = ceil(k / (p - k))
///   k_i = (i + 1) k - i p      for 0 <= i <= s - 1 (all positive)
///   k_p = s p - (s + 1) k      (nonnegative)
/// Construction asserts the linear relations between them.
class KSeq {
 public:
  /// Throws DomainError unless 0 < k < p.
  KSeq(const PrimeField& field, unsigned k);

  std::uint32_t p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  unsigned s() const noexcept { return s_; }
  /// k_i for 0 <= i < s.
  std::uint32_t kval(unsigned i) const { return kvals_.at(i); }
  const std::vector<std::uint32_t>& kvals() const noexcept { return kvals_; }
  std::uint32_t kp() const noexcept { return kp_; }

 private:
  std::uint32_t p_;
  unsigned k_;
  unsigned s_;
  std::vector<std::uint32_t> kvals_;
  std::uint32_t kp_;
};

/// Nondecreasing sequence of positive integers.
class DeltaSeq {
 public:
  DeltaSeq() = default;
  /// Throws DomainError if entries decrease or contain zero.
  explicit DeltaSeq(std::vector<unsigned> entries);

  const std::vector<unsigned>& entries() const noexcept { return entries_; }
  /// ||Delta||
  std::size_t size() const noexcept { return entries_.size(); }
  /// |Delta|
  unsigned weight() const noexcept;
  /// Distinct values, increasing.
  std::vector<unsigned> support() const;
  /// Removes one occurrence of `value` (which must be present).
  DeltaSeq without(unsigned value) const;

  friend bool operator==(const DeltaSeq&, const DeltaSeq&) = default;

 private:
  std::vector<unsigned> entries_;
};

/// All sequences with entries in [1, s-1], length < s and weight <= max_weight,
/// ordered by length and then lexicographically (the empty sequence first).
std::vector<DeltaSeq> enumerate_deltas(unsigned s, unsigned max_weight);

// The three bracket families, built in the first M x-variables and first N
// y-variables of `ring`. Out-of-range indices give the zero polynomial.
// Each listed factor occupies its own variable (see placement_sym), so
// coinciding exponents such as l(p-k) = k_i or k_p = 0 are counted per slot.

/// (Delta, j)_{M,N}: x-exponents (k^(M-t), k_{i_1}, ..., k_{i_t}), y-exponents
/// ((p-k)^(N-j-1), k_p); nonzero only for ||Delta|| <= M and 0 <= j < N.
Poly bracket_round(const DeltaSeq& delta, int j, unsigned M, unsigned N, const KSeq& ks, const Ring& ring);

/// [Delta, j]_{M,N}: same x-part, y-exponents (p-k)^(N-j); nonzero for ||Delta|| <= M, 0 <= j <= N.
Poly bracket_square(const DeltaSeq& delta, int j, unsigned M, unsigned N, const KSeq& ks, const Ring& ring);

/// {Delta, l, j}_{M,N}: x-exponents (k^(M-t-1), l(p-k), k_{i_1}, ..., k_{i_t}),
/// y-exponents (p-k)^(N-j); nonzero for ||Delta|| < M, 0 <= j <= N.
Poly bracket_brace(const DeltaSeq& delta, unsigned l, int j, unsigned M, unsigned N, const KSeq& ks, const Ring& ring);

/// The alternating double sum over brace and round brackets at level (m, n) = (ring.m, ring.n).
Poly w_poly(const KSeq& ks, const Ring& ring);

/// v_k = ((-1)^s / s) w + Sym_m(x_1^k...x_{m-1}^k) (y_1...y_n)^(p-k). Requires m, n >= 1.
Poly v_k(const KSeq& ks, const Ring& ring);

/// (-1)^(s+1) s T^(p-k) [empty, 0]_{m-1,n-1}, living in ring.psi_target().
Poly psi_w_closed_form(const KSeq& ks, const Ring& ring);

}  // namespace ssym
