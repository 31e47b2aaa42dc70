#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "ssym/genexpr.hpp"
#include "ssym/poly.hpp"

namespace ssym {

/// f = (x_1...x_m)^a (y_1...y_n)^b * cofactor with a, b maximal.
struct CoreFactorization {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  Poly cofactor;
};

/// Throws ZeroPolynomial for f = 0.
CoreFactorization factor_core(const Poly& f);

/// Writes (x_1...x_m)^a (y_1...y_n)^b as EX[m]^alpha * U[a mod p] * EY[n]^beta.
/// Requires a + b = 0 (mod p); throws DomainError otherwise.
GenExpr core_to_generators(std::uint32_t a, std::uint32_t b, const Ring& level);

/// One application of the core factorization to a remainder l with l|_{x_m=0} = 0.
struct CoreRecord {
  unsigned m = 0;
  std::uint64_t degree = 0;
  std::uint32_t a = 0;  // maximal exponents returned by factor_core
  std::uint32_t b = 0;
  bool law_holds = false;  // (a + b) mod p == 0
  bool peeled = false;     // a smaller core with a' + b' = 0 (mod p) was divided out instead
  bool solved = false;     // no usable core; the remainder was solved in the generator span
};

struct DecomposeStats {
  std::vector<CoreRecord> cores;
  std::size_t calls = 0;
  std::size_t max_depth = 0;
  std::size_t span_solves = 0;    // remainders solved in the generator span
  std::size_t vk_span_solves = 0; // lifts v_k expressed through the generator span
};

class GeneratorSpan;

/// Expresses supersymmetric polynomials through c_r, sigma_i(x)^p, sigma_j(y)^p
/// and u_k by induction on m:
///   restrict x_m = 0 and decompose at (m-1|n);
///   lift the result (U[k] is lifted through v_k);
///   the remainder l is divisible by x_1...x_m; divide out a core
///   (x...)^a (y...)^b with a + b = 0 (mod p) and recurse on the lower-degree cofactor.
/// When no such core divides l, the remainder is solved directly in the span
/// of the degree-d generator monomials. Every recursive call strictly lowers
/// (m, degree) lexicographically; this is checked.
///
/// Caches (generator polynomials, v_k expressions, spans) live in the object;
/// one Decomposer must not be shared between threads.
class Decomposer {
 public:
  /// `level` fixes (m, n, p); it must not carry T.
  explicit Decomposer(Ring level);
  ~Decomposer();
  Decomposer(Decomposer&&) noexcept;

  /// Throws NotSupersymmetric if f is not in A_s(m|n), RingMismatch on a
  /// different ring, InternalInvariantViolation if a guaranteed step fails.
  GenExpr decompose(const Poly& f);

  /// Generator expression for v_k at level (m', n) with 1 <= m' <= m.
  const GenExpr& vk_expression(unsigned m, unsigned k);

  const DecomposeStats& stats() const noexcept { return stats_; }

 private:
  struct Frame {
    unsigned m;
    std::uint64_t degree;
    std::size_t depth;
  };

  const Ring& level_at(unsigned m);
  GeneratorPolys& polys_at(unsigned m);
  const GeneratorSpan& span_at(unsigned m, std::uint64_t degree);
  GenExpr lift(const GenExpr& h, unsigned m);
  GenExpr solve_in_span(const Poly& f, unsigned m, const char* what);
  GenExpr decompose_homogeneous(const Poly& f, std::optional<Frame> parent);

  Ring top_;
  std::vector<Ring> levels_;
  std::map<unsigned, std::unique_ptr<GeneratorPolys>> polys_;
  std::map<std::pair<unsigned, std::uint64_t>, std::unique_ptr<GeneratorSpan>> spans_;
  std::map<std::pair<unsigned, unsigned>, GenExpr> vk_cache_;
  DecomposeStats stats_;
};

/// Decomposes with a fresh Decomposer.
GenExpr decompose(const Poly& f);

/// expand(e) == f exactly (false on level mismatch).
bool verify_decomposition(const Poly& f, const GenExpr& e);

}  // namespace ssym
