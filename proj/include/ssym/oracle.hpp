#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssym/generators.hpp"
#include "ssym/poly.hpp"

namespace ssym {

/// Partitions of d with at most max_parts parts, each as a nonincreasing list.
std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t d, unsigned max_parts);

/// dim of the degree-d part of A_s(m|n): nullity of f -> d/dT psi(f) on the
/// basis m_lambda(x) m_mu(y), |lambda| + |mu| = d.
std::size_t as_dimension(unsigned m, unsigned n, std::uint32_t p, std::uint32_t d);

/// dim of the span of all generator monomials of weighted degree exactly d.
std::size_t generated_dimension(unsigned m, unsigned n, std::uint32_t p, std::uint32_t d);

struct DimReport {
  unsigned m = 0;
  unsigned n = 0;
  std::uint32_t p = 0;
  std::uint32_t degree = 0;
  std::size_t dim_As = 0;
  std::size_t dim_generated = 0;
  bool match = false;
};

DimReport dim_report(unsigned m, unsigned n, std::uint32_t p, std::uint32_t d);

inline constexpr const char* kDimCsvHeader = "m,n,p,d,dim_As,dim_generated,match";
std::string format_csv_row(const DimReport& r);

/// sum_{r<=R} c_r t^r * prod_j (1 + y_j t) == prod_i (1 + x_i t)  (mod t^(R+1)),
/// with T playing t. Throws DomainError if R < m + n.
bool cr_generating_check(unsigned m, unsigned n, std::uint32_t p, unsigned R);

enum class BracketIdentity { Brace, Round };

/// One instance of the psi-reduction identities for {Delta,l,j}_{m,n} (Brace)
/// or (Delta,j)_{m,n} (Round, l ignored): d/dT(LHS - RHS) == 0.
bool lemma_l1_check(const DeltaSeq& delta, unsigned l, int j, unsigned m, unsigned n, const KSeq& ks,
                    BracketIdentity which);

/// d/dT(psi(w) - closed form) == 0 for a candidate w at level (ring.m, ring.n).
bool psi_w_check(const Poly& w, const KSeq& ks);

}  // namespace ssym
