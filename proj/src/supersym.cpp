#include "ssym/supersym.hpp"

#include "ssym/errors.hpp"
#include "ssym/symfun.hpp"

namespace ssym {

MembershipVerdict is_supersymmetric(const Poly& f) {
  const Ring& R = f.ring();
  if (R.has_t) throw DomainError("is_supersymmetric: ring must not carry T");
  MembershipVerdict v;
  v.symmetric_x = is_symmetric(f, Block::X);
  v.symmetric_y = is_symmetric(f, Block::Y);
  v.derivative_vanishes = (R.m == 0 || R.n == 0) ? true : d_dT(psi(f)).is_zero();
  v.overall = v.symmetric_x && v.symmetric_y && v.derivative_vanishes;
  return v;
}

bool is_strictly_supersymmetric(const Poly& f) {
  const Ring& R = f.ring();
  if (R.has_t || R.m == 0 || R.n == 0) throw DomainError("is_strictly_supersymmetric: needs m, n >= 1 and no T");
  const Poly g = psi(f);
  const auto slot = g.ring().t_slot();
  for (const auto& [mono, c] : g.terms())
    if (mono[slot]) return false;
  return true;
}

bool is_p_balanced(const Poly& f) {
  const Ring& R = f.ring();
  const auto p = R.p();
  for (const auto& [mono, c] : f.terms())
    for (unsigned i = 1; i <= R.m; ++i)
      for (unsigned j = 1; j <= R.n; ++j)
        if ((mono[R.x_slot(i)] + mono[R.y_slot(j)]) % p) return false;
  return true;
}

}  // namespace ssym
