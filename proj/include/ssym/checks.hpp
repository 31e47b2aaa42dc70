#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ssym/decompose.hpp"
#include "ssym/genexpr.hpp"

namespace ssym::checks {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;  // 0: no budget
};

/// Random formal expression of weighted degree <= max_degree: 1..4 terms with
/// nonzero coefficients, each a greedy product of randomly drawn symbols.
GenExpr random_genexpr(const Ring& level, std::uint64_t max_degree, std::mt19937_64& rng);

/// Random polynomial with up to `terms` terms of degree <= max_degree.
Poly random_poly(const Ring& ring, unsigned terms, std::uint32_t max_degree, std::mt19937_64& rng);

/// One acceptance criterion (1..9) with its outcome.
struct Criterion {
  int id;
  SuiteResult result;
};

/// Runs criteria 1..9. Criteria 5 and 6 share one batch of decompositions.
std::vector<Criterion> run_acceptance(std::uint64_t seed = 20240601);

/// Randomized property suites (ring laws, text round-trips, maps, symmetric
/// rewriting, oracle sanity).
std::vector<SuiteResult> run_properties(std::uint64_t seed = 7);

/// "PASS"/"FAIL" line with timing.
std::string format_line(const std::string& label, const SuiteResult& r);

}  // namespace ssym::checks
