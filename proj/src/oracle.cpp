#include "ssym/oracle.hpp"

#include "ssym/echelon.hpp"
#include "ssym/errors.hpp"
#include "ssym/generator_span.hpp"
#include "ssym/symfun.hpp"

namespace ssym {

std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t d, unsigned max_parts) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t left, std::uint32_t cap) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (cur.size() == max_parts) return;
    for (std::uint32_t part = std::min(left, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, left - part, part);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

std::size_t as_dimension(unsigned m, unsigned n, std::uint32_t p, std::uint32_t d) {
  const Ring R(m, n, p);
  std::size_t count = 0;
  const bool constrained = m >= 1 && n >= 1;
  Echelon images(constrained ? R.psi_target() : R);
  for (std::uint32_t dx = 0; dx <= d; ++dx) {
    const auto lambdas = partitions(dx, m);
    const auto mus = partitions(d - dx, n);
    for (const auto& lambda : lambdas)
      for (const auto& mu : mus) {
        ++count;
        if (constrained) images.insert(d_dT(psi(orbit_sym(lambda, Block::X, R) * orbit_sym(mu, Block::Y, R))));
      }
  }
  return count - images.rank();
}

std::size_t generated_dimension(unsigned m, unsigned n, std::uint32_t p, std::uint32_t d) {
  const Ring R(m, n, p);
  GeneratorPolys cache(R);
  Echelon span(R);
  for_each_generator_monomial(R, d, cache, [&](const GenMonomial&, const Poly& f) { span.insert(f); });
  return span.rank();
}

DimReport dim_report(unsigned m, unsigned n, std::uint32_t p, std::uint32_t d) {
  DimReport r{m, n, p, d, as_dimension(m, n, p, d), generated_dimension(m, n, p, d), false};
  r.match = r.dim_As == r.dim_generated;
  return r;
}

std::string format_csv_row(const DimReport& r) {
  return std::to_string(r.m) + "," + std::to_string(r.n) + "," + std::to_string(r.p) + "," +
         std::to_string(r.degree) + "," + std::to_string(r.dim_As) + "," + std::to_string(r.dim_generated) + "," +
         (r.match ? "true" : "false");
}

bool cr_generating_check(unsigned m, unsigned n, std::uint32_t p, unsigned R) {
  if (R < m + n) throw DomainError("cr_generating_check: need R >= m + n");
  const Ring ring(m, n, true, PrimeField(p));
  const auto one = Poly::constant(ring, ring.field.one());
  Poly series(ring);
  for (unsigned r = 0; r <= R; ++r) series += times_t_power(with_t(c_r(r, Ring(m, n, p))), r);
  Poly lhs = series;
  for (unsigned j = 1; j <= n; ++j) lhs *= one + Poly::y(ring, j) * Poly::t(ring);
  Poly rhs = one;
  for (unsigned i = 1; i <= m; ++i) rhs *= one + Poly::x(ring, i) * Poly::t(ring);
  const Poly full = lhs - rhs;
  Poly diff(ring);
  for (const auto& [mono, c] : full.terms())
    if (mono[ring.t_slot()] <= R) diff.add_term(mono, c);
  return diff.is_zero();
}

bool lemma_l1_check(const DeltaSeq& delta, unsigned l, int j, unsigned m, unsigned n, const KSeq& ks,
                    BracketIdentity which) {
  if (m < 1 || n < 1) throw DomainError("lemma_l1_check: needs m, n >= 1");
  const Ring top(m, n, false, PrimeField(ks.p()));
  const Ring low = top.psi_target();
  const unsigned M = m - 1, N = n - 1;
  const std::uint32_t p = ks.p(), k = ks.k(), s = ks.s();
  auto T = [](const Poly& g, std::uint64_t e) { return times_t_power(g, static_cast<std::uint32_t>(e)); };
  auto square = [&](const DeltaSeq& D, int jj) { return bracket_square(D, jj, M, N, ks, low); };

  Poly lhs(low), rhs(low);
  if (which == BracketIdentity::Brace) {
    auto brace = [&](const DeltaSeq& D, int jj) { return bracket_brace(D, l, jj, M, N, ks, low); };
    lhs = psi(bracket_brace(delta, l, j, m, n, ks, top));
    rhs = T(brace(delta, j - 1), k) + T(square(delta, j), std::uint64_t{l + 1} * (p - k)) +
          T(square(delta, j - 1), std::uint64_t{l} * (p - k));
    for (unsigned i : delta.support()) {
      const DeltaSeq rest = delta.without(i);
      rhs += T(brace(rest, j - 1), ks.kval(i)) + T(brace(rest, j), ks.kval(i - 1));
    }
  } else {
    auto round = [&](const DeltaSeq& D, int jj) { return bracket_round(D, jj, M, N, ks, low); };
    lhs = psi(bracket_round(delta, j, m, n, ks, top));
    rhs = T(round(delta, j - 1), k) + T(square(delta, j), std::uint64_t{s} * (p - k));
    for (unsigned i : delta.support()) {
      const DeltaSeq rest = delta.without(i);
      rhs += T(round(rest, j - 1), ks.kval(i)) + T(round(rest, j), ks.kval(i - 1)) +
             T(square(rest, j), std::uint64_t{s - i} * (p - k));
    }
  }
  return d_dT(lhs - rhs).is_zero();
}

bool psi_w_check(const Poly& w, const KSeq& ks) {
  const Ring& R = w.ring();
  if (R.has_t || R.m < 1 || R.n < 1) throw DomainError("psi_w_check: needs a T-free ring with m, n >= 1");
  return d_dT(psi(w) - psi_w_closed_form(ks, R)).is_zero();
}

}  // namespace ssym
