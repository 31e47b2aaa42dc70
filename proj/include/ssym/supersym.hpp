#pragma once

#include "ssym/poly.hpp"

namespace ssym {

struct MembershipVerdict {
  bool symmetric_x = false;
  bool symmetric_y = false;
  bool derivative_vanishes = false;
  bool overall = false;
};

/// Membership in A_s(m|n): symmetric in each block and d/dT psi(f) = 0. When m = 0
/// or n = 0 there is no (x, y) pair and the derivative clause holds vacuously.
MembershipVerdict is_supersymmetric(const Poly& f);

/// psi(f) does not involve T at all. Requires m, n >= 1.
bool is_strictly_supersymmetric(const Poly& f);

/// Every term satisfies p | (x-exponent + y-exponent) for every cross pair.
bool is_p_balanced(const Poly& f);

}  // namespace ssym
