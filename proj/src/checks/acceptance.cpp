#include <chrono>
#include <sstream>

#include "ssym/checks.hpp"
#include "ssym/errors.hpp"
#include "ssym/generator_span.hpp"
#include "ssym/generators.hpp"
#include "ssym/oracle.hpp"
#include "ssym/supersym.hpp"
#include "ssym/symfun.hpp"

namespace ssym::checks {

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::pair<unsigned, unsigned>> kSmallCells = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};

SuiteResult timed(std::string name, double budget, const std::function<bool(std::ostringstream&)>& body) {
  SuiteResult r;
  r.name = std::move(name);
  r.budget_seconds = budget;
  std::ostringstream detail;
  const auto t0 = Clock::now();
  try {
    r.pass = body(detail);
  } catch (const std::exception& e) {
    r.pass = false;
    detail << "exception: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget > 0 && r.seconds > budget) {
    r.pass = false;
    detail << (detail.tellp() > 0 ? "; " : "") << "over time budget";
  }
  r.detail = detail.str();
  return r;
}

template <class F>
void for_vk_grid(F&& f) {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (unsigned k = 1; k < p; ++k)
      for (unsigned m = 1; m <= 3; ++m)
        for (unsigned n = 1; n <= 3; ++n) f(p, k, m, n);
}

std::string cell(std::uint32_t p, unsigned m, unsigned n) {
  return "p=" + std::to_string(p) + " (" + std::to_string(m) + "|" + std::to_string(n) + ")";
}

SuiteResult criterion_vk_contract() {
  return timed("v_k contract", 30, [](std::ostringstream& out) {
    std::size_t cases = 0, bad = 0;
    for_vk_grid([&](std::uint32_t p, unsigned k, unsigned m, unsigned n) {
      const Ring R(m, n, p);
      const KSeq ks(R.field, k);
      const Poly v = v_k(ks, R);
      const std::uint64_t deg = std::uint64_t{m - 1} * k + std::uint64_t{p - k} * n;
      const bool ok = is_symmetric(v, Block::X) && is_symmetric(v, Block::Y) && v.is_homogeneous() &&
                      v.degree() == deg && d_dT(psi(v)).is_zero() &&
                      set_xm_zero(v) == u_k(k, Ring(m - 1, n, p));
      ++cases;
      if (!ok && bad++ == 0) out << "first failure k=" << k << " " << cell(p, m, n) << "; ";
    });
    out << cases - bad << "/" << cases << " (p,k,m,n) cases";
    return bad == 0;
  });
}

SuiteResult criterion_psi_w() {
  return timed("psi(w) closed form", 30, [](std::ostringstream& out) {
    std::size_t cases = 0, bad = 0;
    for_vk_grid([&](std::uint32_t p, unsigned k, unsigned m, unsigned n) {
      const Ring R(m, n, p);
      const KSeq ks(R.field, k);
      ++cases;
      if (!psi_w_check(w_poly(ks, R), ks) && bad++ == 0) out << "first failure k=" << k << " " << cell(p, m, n) << "; ";
    });
    out << cases - bad << "/" << cases << " cases";
    return bad == 0;
  });
}

SuiteResult criterion_bracket_identities() {
  return timed("bracket psi-identities", 120, [](std::ostringstream& out) {
    std::size_t brace = 0, round = 0, bad = 0;
    for (std::uint32_t p : {3u, 5u, 7u})
      for (unsigned k = 1; k < p; ++k) {
        const KSeq ks(PrimeField(p), k);
        const unsigned s = ks.s();
        const auto deltas = enumerate_deltas(s, s * s);
        for (unsigned m = 1; m <= 3; ++m)
          for (unsigned n = 1; n <= 3; ++n)
            for (const auto& D : deltas) {
              for (unsigned l = 1; l <= s; ++l)
                for (int j = 0; j <= static_cast<int>(n); ++j) {
                  ++brace;
                  if (!lemma_l1_check(D, l, j, m, n, ks, BracketIdentity::Brace) && bad++ == 0)
                    out << "first brace failure k=" << k << " l=" << l << " j=" << j << " " << cell(p, m, n) << "; ";
                }
              for (int j = 0; j < static_cast<int>(n); ++j) {
                ++round;
                if (!lemma_l1_check(D, 0, j, m, n, ks, BracketIdentity::Round) && bad++ == 0)
                  out << "first round failure k=" << k << " j=" << j << " " << cell(p, m, n) << "; ";
              }
            }
      }
    out << brace << " brace + " << round << " round instances, " << bad << " failing";
    return bad == 0;
  });
}

SuiteResult criterion_dimensions() {
  return timed("dim A_s = dim generated", 300, [](std::ostringstream& out) {
    std::size_t cells = 0, bad = 0;
    for (std::uint32_t p : {3u, 5u})
      for (auto [m, n] : kSmallCells)
        for (std::uint32_t d = 0; d <= 12; ++d) {
          const DimReport r = dim_report(m, n, p, d);
          ++cells;
          if (!r.match && bad++ == 0) out << "first mismatch " << format_csv_row(r) << "; ";
        }
    out << cells - bad << "/" << cells << " (p,m,n,d) cells match";
    return bad == 0;
  });
}

struct RoundTripBatch {
  std::size_t expressions = 0;
  std::size_t verified = 0;
  std::size_t violations = 0;
  std::string first_problem;
  std::vector<std::pair<std::string, CoreRecord>> cores;  // cell label, record
  std::size_t span_solves = 0;
};

RoundTripBatch run_round_trips(std::uint64_t seed, std::size_t per_cell) {
  RoundTripBatch b;
  std::mt19937_64 rng(seed);
  for (std::uint32_t p : {3u, 5u})
    for (auto [m, n] : kSmallCells) {
      const Ring R(m, n, p);
      Decomposer dec(R);
      GeneratorPolys cache(R);
      for (std::size_t i = 0; i < per_cell; ++i) {
        const GenExpr e = random_genexpr(R, 10, rng);
        const Poly f = expand(e, cache);
        ++b.expressions;
        try {
          const GenExpr g = dec.decompose(f);
          if (expand(g, cache) == f)
            ++b.verified;
          else if (b.first_problem.empty())
            b.first_problem = "round-trip mismatch at " + cell(p, m, n) + " for " + format_genexpr(e);
        } catch (const InternalInvariantViolation& ex) {
          ++b.violations;
          if (b.first_problem.empty()) b.first_problem = cell(p, m, n) + ": " + ex.what();
        }
      }
      for (const auto& c : dec.stats().cores) b.cores.emplace_back(cell(p, m, n), c);
      b.span_solves += dec.stats().span_solves;
    }
  return b;
}

}  // namespace

std::vector<Criterion> run_acceptance(std::uint64_t seed) {
  std::vector<Criterion> out;
  out.push_back({1, criterion_vk_contract()});
  out.push_back({2, criterion_psi_w()});
  out.push_back({3, criterion_bracket_identities()});
  out.push_back({4, criterion_dimensions()});

  RoundTripBatch batch;
  out.push_back({5, timed("decomposition round-trip", 300, [&](std::ostringstream& os) {
                   batch = run_round_trips(seed, 200);
                   os << batch.verified << "/" << batch.expressions << " verified, " << batch.violations
                      << " internal invariant violations";
                   if (!batch.first_problem.empty()) os << "; " << batch.first_problem;
                   return batch.verified == batch.expressions && batch.violations == 0;
                 })});

  out.push_back({6, timed("core exponent law a>0, a+b=0 mod p", 0, [&](std::ostringstream& os) {
                   std::size_t bad = 0;
                   const std::pair<std::string, CoreRecord>* first = nullptr;
                   for (const auto& rc : batch.cores) {
                     const CoreRecord& c = rc.second;
                     if (c.a > 0 && c.law_holds) continue;
                     if (!first) first = &rc;
                     ++bad;
                   }
                   os << batch.cores.size() - bad << "/" << batch.cores.size() << " remainders obey the law";
                   if (first)
                     os << "; first violation " << first->first << " degree " << first->second.degree
                        << " a=" << first->second.a << " b=" << first->second.b << "; " << batch.span_solves
                        << " remainders needed the span fallback";
                   return !batch.cores.empty() && bad == 0;
                 })});

  out.push_back({7, timed("c_r supersymmetric, strict, generating function", 30, [](std::ostringstream& os) {
                   std::size_t cases = 0, bad = 0;
                   for (std::uint32_t p : {3u, 5u, 7u})
                     for (unsigned m = 1; m <= 3; ++m)
                       for (unsigned n = 1; n <= 3; ++n) {
                         const Ring R(m, n, p);
                         for (unsigned r = 0; r <= 6; ++r) {
                           const Poly c = c_r(r, R);
                           ++cases;
                           if (!(is_supersymmetric(c).overall && is_strictly_supersymmetric(c)) && bad++ == 0)
                             os << "first failure r=" << r << " " << cell(p, m, n) << "; ";
                         }
                         ++cases;
                         if (!cr_generating_check(m, n, p, m + n + 3) && bad++ == 0)
                           os << "generating function fails at " << cell(p, m, n) << "; ";
                       }
                   os << cases - bad << "/" << cases << " checks";
                   return bad == 0;
                 })});

  out.push_back({8, timed("v_k decomposes over the generators", 60, [](std::ostringstream& os) {
                   std::size_t cases = 0, bad = 0;
                   for (std::uint32_t p : {3u, 5u})
                     for (unsigned m = 1; m <= 2; ++m)
                       for (unsigned n = 1; n <= 2; ++n) {
                         const Ring R(m, n, p);
                         Decomposer dec(R);
                         for (unsigned k = 1; k < p; ++k) {
                           const Poly v = v_k(KSeq(R.field, k), R);
                           ++cases;
                           if (!verify_decomposition(v, dec.decompose(v)) && bad++ == 0)
                             os << "first failure k=" << k << " " << cell(p, m, n) << "; ";
                         }
                       }
                   os << cases - bad << "/" << cases << " verified";
                   return bad == 0;
                 })});

  out.push_back({9, timed("p-balance of sigma^p and u_k", 10, [](std::ostringstream& os) {
                   std::size_t cases = 0, bad = 0;
                   for (std::uint32_t p : {3u, 5u, 7u})
                     for (unsigned m = 1; m <= 3; ++m)
                       for (unsigned n = 1; n <= 3; ++n) {
                         const Ring R(m, n, p);
                         std::vector<Poly> gens;
                         for (unsigned i = 1; i <= m; ++i) gens.push_back(sigma_x_p(i, R));
                         for (unsigned j = 1; j <= n; ++j) gens.push_back(sigma_y_p(j, R));
                         for (unsigned k = 1; k < p; ++k) gens.push_back(u_k(k, R));
                         for (const auto& g : gens) {
                           ++cases;
                           if (!is_p_balanced(g) && bad++ == 0) os << "first failure at " << cell(p, m, n) << "; ";
                         }
                       }
                   os << cases - bad << "/" << cases << " generators";
                   return bad == 0;
                 })});
  return out;
}

std::string format_line(const std::string& label, const SuiteResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  " << label << "  " << r.name << "  [" << std::fixed;
  os.precision(2);
  os << r.seconds << " s";
  if (r.budget_seconds > 0) os << " / " << r.budget_seconds << " s";
  os << "]  " << r.detail;
  return os.str();
}

GenExpr random_genexpr(const Ring& level, std::uint64_t max_degree, std::mt19937_64& rng) {
  const auto symbols = generator_symbols(level, max_degree);
  const std::uint32_t p = level.p();
  GenExpr e(level);
  const unsigned nterms = 1 + rng() % 4;
  for (unsigned t = 0; t < nterms; ++t) {
    const std::uint64_t target = rng() % (max_degree + 1);
    std::uint64_t d = 0;
    std::vector<GenMonomial::Factor> factors;
    for (unsigned tries = 0; tries < 8 && !symbols.empty(); ++tries) {
      const GenSymbol s = symbols[rng() % symbols.size()];
      const auto sd = symbol_degree(s, level);
      if (d + sd <= target) {
        factors.push_back({s, 1});
        d += sd;
      }
    }
    e.add_term(GenMonomial::from_factors(std::move(factors)), FpElem{static_cast<std::uint32_t>(1 + rng() % (p - 1))});
  }
  return e;
}

Poly random_poly(const Ring& ring, unsigned terms, std::uint32_t max_degree, std::mt19937_64& rng) {
  Poly f(ring);
  const std::size_t nv = ring.nvars();
  for (unsigned t = 0; t < terms; ++t) {
    Monomial mono(nv);
    std::uint32_t budget = nv ? static_cast<std::uint32_t>(rng() % (max_degree + 1)) : 0;
    while (budget > 0) {
      const std::size_t slot = rng() % nv;
      mono.set(slot, mono[slot] + 1);
      --budget;
    }
    f.add_term(mono, ring.field.from_int(static_cast<std::int64_t>(rng() % ring.p())));
  }
  return f;
}

}  // namespace ssym::checks
