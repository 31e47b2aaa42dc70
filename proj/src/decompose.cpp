#include "ssym/decompose.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ssym/errors.hpp"
#include "ssym/generator_span.hpp"
#include "ssym/generators.hpp"
#include "ssym/supersym.hpp"
#include "ssym/symfun.hpp"

namespace ssym {

CoreFactorization factor_core(const Poly& f) {
  if (f.is_zero()) throw ZeroPolynomial("factor_core: zero polynomial");
  const Ring& R = f.ring();
  std::uint32_t a = R.m ? std::numeric_limits<std::uint32_t>::max() : 0;
  std::uint32_t b = R.n ? std::numeric_limits<std::uint32_t>::max() : 0;
  for (const auto& [mono, c] : f.terms()) {
    for (unsigned i = 1; i <= R.m; ++i) a = std::min(a, mono[R.x_slot(i)]);
    for (unsigned j = 1; j <= R.n; ++j) b = std::min(b, mono[R.y_slot(j)]);
  }
  Monomial core(R.nvars());
  for (unsigned i = 1; i <= R.m; ++i) core.set(R.x_slot(i), a);
  for (unsigned j = 1; j <= R.n; ++j) core.set(R.y_slot(j), b);
  return CoreFactorization{a, b, exact_monomial_div(f, core)};
}

GenExpr core_to_generators(std::uint32_t a, std::uint32_t b, const Ring& level) {
  const std::uint32_t p = level.p();
  if ((std::uint64_t{a} + b) % p) throw DomainError("core_to_generators: a + b must vanish mod p");
  const std::uint32_t k0 = a % p;
  const std::uint32_t alpha = a / p;
  std::uint32_t rest_b = b;
  std::vector<GenMonomial::Factor> factors;
  if (alpha) {
    if (level.m == 0) throw DomainError("core_to_generators: a > 0 needs m >= 1");
    factors.push_back({{GenKind::EX, level.m}, alpha});
  }
  if (k0) {
    if (level.n == 0 || b < p - k0) throw DomainError("core_to_generators: u_k needs n >= 1 and b >= p - k");
    factors.push_back({{GenKind::U, k0}, 1});
    rest_b -= p - k0;
  }
  if (rest_b) {
    if (level.n == 0) throw DomainError("core_to_generators: b > 0 needs n >= 1");
    factors.push_back({{GenKind::EY, level.n}, rest_b / p});
  }
  GenExpr e(level);
  e.add_term(GenMonomial::from_factors(std::move(factors)), level.field.one());
  return e;
}

Decomposer::Decomposer(Ring level) : top_(std::move(level)) {
  if (top_.has_t) throw DomainError("Decomposer: level must not carry T");
  for (unsigned m = 0; m <= top_.m; ++m) levels_.emplace_back(m, top_.n, false, top_.field);
}

Decomposer::~Decomposer() = default;
Decomposer::Decomposer(Decomposer&&) noexcept = default;

const Ring& Decomposer::level_at(unsigned m) { return levels_.at(m); }

GeneratorPolys& Decomposer::polys_at(unsigned m) {
  auto& slot = polys_[m];
  if (!slot) slot = std::make_unique<GeneratorPolys>(level_at(m));
  return *slot;
}

const GeneratorSpan& Decomposer::span_at(unsigned m, std::uint64_t degree) {
  auto& slot = spans_[{m, degree}];
  if (!slot) slot = std::make_unique<GeneratorSpan>(level_at(m), degree, polys_at(m));
  return *slot;
}

GenExpr Decomposer::solve_in_span(const Poly& f, unsigned m, const char* what) {
  const std::uint64_t d = f.degree().value_or(0);
  auto e = span_at(m, d).solve(f);
  if (!e || !(expand(*e, polys_at(m)) == f))
    throw InternalInvariantViolation(std::string(what) + " of degree " + std::to_string(d) + " at level (" +
                                     std::to_string(m) + "|" + std::to_string(top_.n) +
                                     ") is not a combination of generator monomials");
  return *e;
}

const GenExpr& Decomposer::vk_expression(unsigned m, unsigned k) {
  if (m < 1 || m > top_.m) throw DomainError("vk_expression: level out of range");
  auto it = vk_cache_.find({m, k});
  if (it != vk_cache_.end()) return it->second;
  const Ring& L = level_at(m);
  const Poly v = v_k(KSeq(L.field, k), L);
  GenExpr e(L);
  if (m == 1) {
    // Restriction to x_1 = 0 lands in the m = 0 base case, which never produces U.
    e = decompose_homogeneous(v, std::nullopt);
    if (!(expand(e, polys_at(m)) == v)) throw InternalInvariantViolation("v_k decomposition does not expand to v_k");
  } else {
    // The restriction of v_k is u_k(m-1|n) itself, so the recursive route would
    // need this very expression.
    e = solve_in_span(v, m, "v_k");
    ++stats_.vk_span_solves;
  }
  return vk_cache_.emplace(std::pair{m, k}, std::move(e)).first->second;
}

GenExpr Decomposer::lift(const GenExpr& h, unsigned m) {
  const Ring& L = level_at(m);
  GenExpr out(L);
  for (const auto& [mono, c] : h.terms()) {
    GenExpr prod = GenExpr::constant(L, c);
    for (const auto& [s, e] : mono.factors()) {
      if (s.kind == GenKind::U)
        prod = prod * pow(vk_expression(m, s.index), e);
      else
        prod = prod * GenExpr::symbol(L, s, e);
    }
    out += prod;
  }
  return out;
}

GenExpr Decomposer::decompose_homogeneous(const Poly& f, std::optional<Frame> parent) {
  const unsigned m = f.ring().m;
  const std::uint64_t deg = f.degree().value_or(0);
  const Frame me{m, deg, parent ? parent->depth + 1 : 0};
  if (parent && !(m < parent->m || (m == parent->m && deg < parent->degree)))
    throw InternalInvariantViolation("decompose: (m, degree) did not decrease along the recursion");
  ++stats_.calls;
  stats_.max_depth = std::max(stats_.max_depth, me.depth);

  const Ring& L = level_at(m);
  const auto& F = L.field;
  if (f.is_zero()) return GenExpr(L);
  if (f.is_constant()) return GenExpr::constant(L, f.leading_term().second);

  if (L.n == 0) {
    // c_r(m|0) = sigma_r(x)
    const FamilyExpr fe = rewrite_symmetric(f, Block::X, Family::Elementary);
    GenExpr out(L);
    for (const auto& [mono, c] : fe.expr.terms()) {
      std::vector<GenMonomial::Factor> factors;
      for (unsigned i = 0; i < fe.width; ++i) factors.push_back({{GenKind::C, i + 1}, mono[i]});
      out.add_term(GenMonomial::from_factors(std::move(factors)), c);
    }
    return out;
  }
  if (m == 0) {
    // c_r(0|n) = (-1)^r h_r(y)
    const FamilyExpr fe = rewrite_symmetric(f, Block::Y, Family::Complete);
    GenExpr out(L);
    for (const auto& [mono, c] : fe.expr.terms()) {
      std::vector<GenMonomial::Factor> factors;
      std::uint64_t odd = 0;
      for (unsigned r = 1; r <= fe.width; ++r) {
        factors.push_back({{GenKind::C, r}, mono[r - 1]});
        odd += std::uint64_t{r % 2} * mono[r - 1];
      }
      out.add_term(GenMonomial::from_factors(std::move(factors)), odd % 2 ? F.neg(c) : c);
    }
    return out;
  }

  const GenExpr h = decompose_homogeneous(set_xm_zero(f), me);
  GenExpr lifted = lift(h, m);
  Poly l = f - expand(lifted, polys_at(m));
  if (!set_xm_zero(l).is_zero()) throw InternalInvariantViolation("decompose: remainder does not vanish at x_m = 0");
  if (l.is_zero()) return lifted;

  const CoreFactorization core = factor_core(l);
  const std::uint32_t p = L.p();
  CoreRecord rec{m, deg, core.a, core.b, (std::uint64_t{core.a} + core.b) % p == 0, false, false};
  if (core.a == 0) throw InternalInvariantViolation("decompose: x_m divides the remainder but the x-core is trivial");

  // Largest core (x...)^a' (y...)^b' with a' + b' = 0 mod p, a' >= 1.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> usable;
  for (std::uint32_t a2 = core.a; a2 >= 1 && !usable; --a2) {
    const std::uint32_t r = (a2 + core.b) % p;
    if (core.b >= r) usable = std::pair{a2, core.b - r};
  }

  if (!usable) {
    rec.solved = true;
    stats_.cores.push_back(rec);
    ++stats_.span_solves;
    return lifted + solve_in_span(l, m, "remainder");
  }

  const auto [a2, b2] = *usable;
  rec.peeled = !rec.law_holds;
  stats_.cores.push_back(rec);
  Monomial divisor(L.nvars());
  for (unsigned i = 1; i <= L.m; ++i) divisor.set(L.x_slot(i), a2);
  for (unsigned j = 1; j <= L.n; ++j) divisor.set(L.y_slot(j), b2);
  const Poly g = exact_monomial_div(l, divisor);
  if (!is_supersymmetric(g).overall)
    throw InternalInvariantViolation("decompose: cofactor of a core with a + b = 0 mod p is not supersymmetric");
  return lifted + core_to_generators(a2, b2, L) * decompose_homogeneous(g, me);
}

GenExpr Decomposer::decompose(const Poly& f) {
  if (!(f.ring() == top_)) throw RingMismatch("decompose: polynomial ring differs from the decomposer level");
  if (!is_supersymmetric(f).overall) throw NotSupersymmetric("decompose: input is not supersymmetric");
  GenExpr out(top_);
  for (const auto& [d, component] : homogeneous_components(f)) out += decompose_homogeneous(component, std::nullopt);
  return out;
}

GenExpr decompose(const Poly& f) {
  Decomposer d(f.ring());
  return d.decompose(f);
}

bool verify_decomposition(const Poly& f, const GenExpr& e) {
  if (f.ring().has_t || !(Ring(f.ring().m, f.ring().n, false, f.field()) == e.level())) return false;
  return expand(e, f.ring()) == f;
}

}  // namespace ssym
