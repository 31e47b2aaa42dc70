#pragma once

#include <cstdint>
#include <span>

#include "ssym/poly.hpp"

namespace ssym {

/// One of the two variable groups: x_1..x_m or y_1..y_n.
enum class Block { X, Y };

unsigned block_size(const Ring& ring, Block block) noexcept;
std::size_t block_slot(const Ring& ring, Block block, unsigned index) noexcept;

/// sigma_i of the block variables; zero when i exceeds the block size, one when i = 0.
Poly elementary(unsigned i, Block block, const Ring& ring);

/// Complete homogeneous symmetric polynomial h_j of the block variables.
Poly complete(unsigned j, Block block, const Ring& ring);

/// Monomial symmetric function over the first `width` variables of the block:
/// the sum of the distinct monomials in the orbit of the exponent multiset, each
/// with coefficient one. Zero exponents are padding. Throws DomainError if more
/// than `width` exponents are nonzero.
Poly orbit_sym(std::span<const std::uint32_t> exponents, Block block, const Ring& ring, unsigned width);
Poly orbit_sym(std::span<const std::uint32_t> exponents, Block block, const Ring& ring);

/// A listed factor x^exponent that belongs to a labelled class of interchangeable factors.
struct SlotFactor {
  unsigned slot_class;
  std::uint32_t exponent;
};

/// Symmetrization in which each listed factor occupies its own variable, factors of
/// the same class are interchangeable and unlisted variables get exponent zero.
/// Each monomial of the orbit is weighted by the number of class-respecting
/// placements producing it. When all classes carry distinct positive exponents
/// this is exactly orbit_sym.
Poly placement_sym(std::span<const SlotFactor> factors, Block block, const Ring& ring, unsigned width);

/// Invariance under every adjacent transposition inside the block.
bool is_symmetric(const Poly& f, Block block);

enum class Family { Elementary, Complete };

/// A polynomial in formal symbols family_1..family_width. `expr` lives in the ring
/// with `width` x-variables and no y-variables, x_i standing for symbol i.
struct FamilyExpr {
  Family family;
  Block block;
  unsigned width;
  Poly expr;
};

/// Rewrites a symmetric polynomial of one block in the chosen family.
/// Elementary uses leading-term elimination in graded-lex order; Complete
/// converts that result through e_j = sum_{i<j} (-1)^{j-i+1} e_i h_{j-i}.
/// Throws NotSymmetric if f is not symmetric or involves other variables.
FamilyExpr rewrite_symmetric(const Poly& f, Block block, Family family);

/// Substitutes the actual symmetric polynomials for the formal symbols.
Poly expand_family(const FamilyExpr& e, const Ring& ring);

}  // namespace ssym
