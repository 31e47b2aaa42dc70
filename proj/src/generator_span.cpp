#include "ssym/generator_span.hpp"

#include "ssym/errors.hpp"

namespace ssym {

std::vector<GenSymbol> generator_symbols(const Ring& level, std::uint64_t max_degree) {
  std::vector<GenSymbol> out;
  auto keep = [&](GenSymbol s) {
    const auto d = symbol_degree(s, level);
    if (d >= 1 && d <= max_degree) out.push_back(s);
  };
  for (unsigned r = 1; r <= max_degree; ++r) keep({GenKind::C, r});
  for (unsigned i = 1; i <= level.m; ++i) keep({GenKind::EX, i});
  for (unsigned j = 1; j <= level.n; ++j) keep({GenKind::EY, j});
  if (level.n >= 1)
    for (unsigned k = 1; k < level.p(); ++k) keep({GenKind::U, k});
  return out;
}

void for_each_generator_monomial(const Ring& level, std::uint64_t degree, GeneratorPolys& cache,
                                 const std::function<void(const GenMonomial&, const Poly&)>& visit) {
  const auto symbols = generator_symbols(level, degree);
  std::vector<std::uint64_t> deg;
  for (const auto& s : symbols) deg.push_back(symbol_degree(s, level));

  std::vector<GenMonomial::Factor> factors;
  // Depth-first over symbols in order; `partial` is the product chosen so far.
  auto rec = [&](auto&& self, std::size_t idx, std::uint64_t left, const Poly& partial) -> void {
    if (left == 0) {
      visit(GenMonomial::from_factors(factors), partial);
      return;
    }
    if (idx == symbols.size()) return;
    self(self, idx + 1, left, partial);
    Poly acc = partial;
    std::uint32_t e = 0;
    while (deg[idx] <= left) {
      left -= deg[idx];
      ++e;
      acc *= cache.symbol(symbols[idx]);
      factors.emplace_back(symbols[idx], e);
      self(self, idx + 1, left, acc);
      factors.pop_back();
    }
  };
  rec(rec, 0, degree, Poly::constant(level, level.field.one()));
}

Poly dominant_part(const Poly& f) {
  const Ring& R = f.ring();
  Poly r(R);
  for (const auto& [mono, c] : f.terms()) {
    bool ok = true;
    for (unsigned i = 1; i < R.m && ok; ++i) ok = mono[R.x_slot(i)] >= mono[R.x_slot(i + 1)];
    for (unsigned j = 1; j < R.n && ok; ++j) ok = mono[R.y_slot(j)] >= mono[R.y_slot(j + 1)];
    if (ok) r.add_term(mono, c);
  }
  return r;
}

GeneratorSpan::GeneratorSpan(const Ring& level, std::uint64_t degree, GeneratorPolys& cache)
    : level_(level), echelon_(level, true) {
  if (!(cache.level() == level)) throw RingMismatch("GeneratorSpan: cache level differs");
  if (degree == 0) {
    monomials_.emplace_back();
    echelon_.insert(Poly::constant(level, level.field.one()));
    return;
  }
  for_each_generator_monomial(level, degree, cache, [&](const GenMonomial& m, const Poly& f) {
    monomials_.push_back(m);
    echelon_.insert(dominant_part(f));
  });
}

std::optional<GenExpr> GeneratorSpan::solve(const Poly& f) const {
  auto combo = echelon_.solve(dominant_part(f));
  if (!combo) return std::nullopt;
  GenExpr e(level_);
  for (const auto& [idx, c] : *combo) e.add_term(monomials_[idx], c);
  return e;
}

}  // namespace ssym
