#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ssym/echelon.hpp"
#include "ssym/genexpr.hpp"

namespace ssym {

/// Generator symbols of positive degree <= max_degree at a level, in symbol order.
std::vector<GenSymbol> generator_symbols(const Ring& level, std::uint64_t max_degree);

/// Calls visit(monomial, expansion) for every generator monomial of weighted degree
/// exactly `degree` (C[0] excluded, so each monomial is listed once).
void for_each_generator_monomial(const Ring& level, std::uint64_t degree, GeneratorPolys& cache,
                                 const std::function<void(const GenMonomial&, const Poly&)>& visit);

/// Coefficients of f at monomials whose x- and y-exponents are both nonincreasing.
/// For block-symmetric f this determines f.
Poly dominant_part(const Poly& f);

/// Span of all generator monomials of one degree at one level, in echelon form
/// over their dominant coordinates.
class GeneratorSpan {
 public:
  GeneratorSpan(const Ring& level, std::uint64_t degree, GeneratorPolys& cache);

  std::size_t rank() const noexcept { return echelon_.rank(); }
  std::size_t monomial_count() const noexcept { return monomials_.size(); }

  /// A generator expression for a block-symmetric homogeneous f of this degree, if it is in the span.
  std::optional<GenExpr> solve(const Poly& f) const;

 private:
  Ring level_;
  std::vector<GenMonomial> monomials_;
  Echelon echelon_;
};

}  // namespace ssym
