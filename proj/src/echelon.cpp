#include "ssym/echelon.hpp"

#include "ssym/errors.hpp"

namespace ssym {

void Echelon::axpy(Combination& into, FpElem c, const Combination& from) const {
  const auto& F = ring_.field;
  for (const auto& [idx, a] : from) {
    auto& slot = into[idx];
    slot = F.add(slot, F.mul(c, a));
    if (slot.is_zero()) into.erase(idx);
  }
}

void Echelon::reduce(Poly& v, Combination* combo, bool subtract_combo) const {
  const auto& F = ring_.field;
  // Subtracting a row only introduces monomials below its pivot, so one
  // descending sweep suffices.
  auto it = v.terms().begin();
  while (it != v.terms().end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const Monomial pivot = it->first;
    const FpElem c = it->second;
    v.add_scaled(F.neg(c), row->second.vec);
    if (combo) axpy(*combo, subtract_combo ? F.neg(c) : c, row->second.combo);
    it = v.terms().upper_bound(pivot);
  }
}

bool Echelon::insert(Poly v) {
  if (!(v.ring() == ring_)) throw RingMismatch("Echelon::insert: vector outside the ring");
  const std::size_t index = inserted_++;
  Combination combo;
  if (track_) combo[index] = ring_.field.one();
  reduce(v, track_ ? &combo : nullptr, true);
  if (v.is_zero()) return false;
  const auto [lead, c] = v.leading_term();
  const FpElem inv = ring_.field.inv(c);
  v *= inv;
  if (track_)
    for (auto& [idx, a] : combo) a = ring_.field.mul(a, inv);
  const Monomial pivot = lead;
  rows_.emplace(pivot, Row{std::move(v), std::move(combo)});
  return true;
}

bool Echelon::contains(Poly v) const {
  if (!(v.ring() == ring_)) throw RingMismatch("Echelon::contains: vector outside the ring");
  reduce(v, nullptr, false);
  return v.is_zero();
}

std::optional<Echelon::Combination> Echelon::solve(Poly target) const {
  if (!track_) throw DomainError("Echelon::solve: combinations were not tracked");
  if (!(target.ring() == ring_)) throw RingMismatch("Echelon::solve: target outside the ring");
  Combination combo;
  reduce(target, &combo, false);
  if (!target.is_zero()) return std::nullopt;
  return combo;
}

}  // namespace ssym
