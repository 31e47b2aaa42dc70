#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "ssym/poly.hpp"

namespace ssym {

/// Incremental row echelon form over F_p whose rows are sparse vectors indexed
/// by monomials (stored as Polys). The pivot of a row is its leading monomial.
/// Optionally tracks, for every row, the combination of inserted vectors it
/// came from, so targets can be written in terms of the inputs.
class Echelon {
 public:
  using Combination = std::map<std::size_t, FpElem>;

  explicit Echelon(Ring ring, bool track_combinations = false)
      : ring_(std::move(ring)), track_(track_combinations) {}

  /// Adds the next input vector (its index is the number of earlier inserts).
  /// Returns true when it was independent of the previous ones.
  bool insert(Poly v);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t inserted() const noexcept { return inserted_; }

  /// Whether v lies in the span of the inserted vectors.
  bool contains(Poly v) const;

  /// Coefficients c_i with sum c_i * input_i = target, when one exists.
  /// Requires track_combinations.
  std::optional<Combination> solve(Poly target) const;

 private:
  struct Row {
    Poly vec;
    Combination combo;
  };

  // Eliminates every pivot monomial from v; `combo` accumulates sign * c * row.combo.
  void reduce(Poly& v, Combination* combo, bool subtract_combo) const;
  void axpy(Combination& into, FpElem c, const Combination& from) const;

  Ring ring_;
  bool track_;
  std::size_t inserted_ = 0;
  std::map<Monomial, Row, GrlexDescending> rows_;
};

}  // namespace ssym
