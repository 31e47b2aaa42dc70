#include "ssym/symfun.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "ssym/errors.hpp"

namespace ssym {

unsigned block_size(const Ring& ring, Block block) noexcept { return block == Block::X ? ring.m : ring.n; }

std::size_t block_slot(const Ring& ring, Block block, unsigned index) noexcept {
  return block == Block::X ? ring.x_slot(index) : ring.y_slot(index);
}

namespace {

// Calls visit(exps) for every distinct arrangement of `exps` (ascending-sorted on entry).
template <class Visit>
void for_each_distinct_permutation(std::vector<std::uint32_t> exps, Visit&& visit) {
  std::sort(exps.begin(), exps.end());
  do {
    visit(exps);
  } while (std::next_permutation(exps.begin(), exps.end()));
}

Monomial block_monomial(const Ring& ring, Block block, std::span<const std::uint32_t> exps) {
  Monomial mono(ring.nvars());
  for (unsigned i = 0; i < exps.size(); ++i) mono.set(block_slot(ring, block, i + 1), exps[i]);
  return mono;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Poly elementary(unsigned i, Block block, const Ring& ring) {
  const unsigned size = block_size(ring, block);
  if (i > size) return Poly(ring);
  std::vector<std::uint32_t> exps(size, 0);
  std::fill(exps.end() - i, exps.end(), 1u);
  Poly r(ring);
  for_each_distinct_permutation(exps, [&](const auto& e) { r.add_term(block_monomial(ring, block, e), ring.field.one()); });
  return r;
}

Poly complete(unsigned j, Block block, const Ring& ring) {
  const unsigned size = block_size(ring, block);
  if (j == 0) return Poly::constant(ring, ring.field.one());
  Poly r(ring);
  if (size == 0) return r;
  // Compositions of j into `size` parts.
  std::vector<std::uint32_t> exps(size, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
    if (pos + 1 == size) {
      exps[pos] = left;
      r.add_term(block_monomial(ring, block, exps), ring.field.one());
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, j);
  return r;
}

Poly orbit_sym(std::span<const std::uint32_t> exponents, Block block, const Ring& ring, unsigned width) {
  if (width > block_size(ring, block)) throw DomainError("orbit_sym: width exceeds block size");
  std::vector<std::uint32_t> nonzero;
  for (auto e : exponents)
    if (e) nonzero.push_back(e);
  if (nonzero.size() > width) throw DomainError("orbit_sym: more nonzero exponents than variables");
  nonzero.resize(width, 0);
  Poly r(ring);
  for_each_distinct_permutation(nonzero, [&](const auto& e) { r.add_term(block_monomial(ring, block, e), ring.field.one()); });
  return r;
}

Poly orbit_sym(std::span<const std::uint32_t> exponents, Block block, const Ring& ring) {
  return orbit_sym(exponents, block, ring, block_size(ring, block));
}

Poly placement_sym(std::span<const SlotFactor> factors, Block block, const Ring& ring, unsigned width) {
  if (width > block_size(ring, block)) throw DomainError("placement_sym: width exceeds block size");
  if (factors.size() > width) throw DomainError("placement_sym: more factors than variables");

  // exponent value -> (class -> count); unlisted variables form their own class.
  constexpr unsigned kAbsent = ~0u;
  std::map<std::uint32_t, std::map<unsigned, std::uint64_t>> classes;
  std::vector<std::uint32_t> exps;
  for (const auto& f : factors) {
    ++classes[f.exponent][f.slot_class];
    exps.push_back(f.exponent);
  }
  if (width > factors.size()) classes[0][kAbsent] += width - factors.size();
  exps.resize(width, 0);

  std::uint64_t multiplicity = 1;
  for (const auto& [value, counts] : classes) {
    std::uint64_t total = 0;
    for (const auto& [cls, c] : counts) {
      total += c;
      multiplicity = multiplicity * binomial(total, c) % ring.p();
    }
  }
  const FpElem weight = ring.field.from_int(static_cast<std::int64_t>(multiplicity));
  Poly r(ring);
  if (weight.is_zero()) return r;
  for_each_distinct_permutation(exps, [&](const auto& e) { r.add_term(block_monomial(ring, block, e), weight); });
  return r;
}

bool is_symmetric(const Poly& f, Block block) {
  const Ring& R = f.ring();
  const unsigned size = block_size(R, block);
  for (unsigned i = 1; i < size; ++i) {
    const auto a = block_slot(R, block, i);
    const auto b = block_slot(R, block, i + 1);
    for (const auto& [mono, c] : f.terms()) {
      if (mono[a] == mono[b]) continue;
      Monomial swapped = mono;
      swapped.set(a, mono[b]);
      swapped.set(b, mono[a]);
      if (f.coeff(swapped) != c) return false;
    }
  }
  return true;
}

namespace {

FamilyExpr rewrite_elementary(const Poly& f, Block block) {
  const Ring& R = f.ring();
  const unsigned width = block_size(R, block);
  const Ring sym_ring(width, 0, false, R.field);
  std::vector<Poly> e;
  for (unsigned i = 0; i <= width; ++i) e.push_back(elementary(i, block, R));

  FamilyExpr out{Family::Elementary, block, width, Poly(sym_ring)};
  Poly rest = f;
  while (!rest.is_zero()) {
    const auto [lead, c] = rest.leading_term();
    // Leading monomial of a symmetric polynomial is a partition lambda; subtract
    // c * e_1^(l1-l2) * ... * e_w^(lw).
    std::vector<std::uint32_t> lambda(width);
    for (unsigned i = 0; i < width; ++i) lambda[i] = lead[block_slot(R, block, i + 1)];
    std::vector<std::uint32_t> sym_exps(width);
    Poly product = Poly::constant(R, c);
    for (unsigned i = 0; i < width; ++i) {
      const std::uint32_t next = i + 1 < width ? lambda[i + 1] : 0;
      if (lambda[i] < next) throw NotSymmetric("rewrite_symmetric: leading exponent is not a partition");
      sym_exps[i] = lambda[i] - next;
      if (sym_exps[i]) product *= pow(e[i + 1], sym_exps[i]);
    }
    out.expr.add_term(Monomial(sym_exps), c);
    rest -= product;
    if (!rest.is_zero() && !GrlexDescending{}(lead, rest.leading_term().first))
      throw NotSymmetric("rewrite_symmetric: elimination did not lower the leading monomial");
  }
  return out;
}

}  // namespace

FamilyExpr rewrite_symmetric(const Poly& f, Block block, Family family) {
  const Ring& R = f.ring();
  const Block other = block == Block::X ? Block::Y : Block::X;
  for (const auto& [mono, c] : f.terms()) {
    for (unsigned i = 1; i <= block_size(R, other); ++i)
      if (mono[block_slot(R, other, i)]) throw NotSymmetric("rewrite_symmetric: polynomial involves the other block");
    if (R.has_t && mono[R.t_slot()]) throw NotSymmetric("rewrite_symmetric: polynomial involves T");
  }
  if (!is_symmetric(f, block)) throw NotSymmetric("rewrite_symmetric: polynomial is not symmetric");

  FamilyExpr elem = rewrite_elementary(f, block);
  if (family == Family::Elementary) return elem;

  // e_j as polynomials in the formal h-symbols.
  const Ring& S = elem.expr.ring();
  const unsigned width = elem.width;
  std::vector<Poly> e_in_h{Poly::constant(S, S.field.one())};
  for (unsigned j = 1; j <= width; ++j) {
    Poly acc(S);
    for (unsigned i = 0; i < j; ++i) {
      Poly t = e_in_h[i] * Poly::x(S, j - i);
      if ((j - i + 1) % 2) t = -t;
      acc += t;
    }
    e_in_h.push_back(std::move(acc));
  }
  std::vector<Poly> images(e_in_h.begin() + 1, e_in_h.end());
  return FamilyExpr{Family::Complete, block, width, substitute(elem.expr, S, images)};
}

Poly expand_family(const FamilyExpr& e, const Ring& ring) {
  std::vector<Poly> images;
  for (unsigned i = 1; i <= e.width; ++i)
    images.push_back(e.family == Family::Elementary ? elementary(i, e.block, ring) : complete(i, e.block, ring));
  return substitute(e.expr, ring, images);
}

}  // namespace ssym
