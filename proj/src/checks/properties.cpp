#include <chrono>
#include <sstream>

#include "ssym/checks.hpp"
#include "ssym/generators.hpp"
#include "ssym/oracle.hpp"
#include "ssym/poly_io.hpp"
#include "ssym/supersym.hpp"
#include "ssym/symfun.hpp"

namespace ssym::checks {

namespace {

using Clock = std::chrono::steady_clock;

// Runs `trial` `count` times; the suite fails on the first false.
SuiteResult property(std::string name, std::size_t count, const std::function<bool(std::size_t)>& trial) {
  SuiteResult r;
  r.name = std::move(name);
  const auto t0 = Clock::now();
  std::size_t done = 0;
  try {
    for (; done < count; ++done)
      if (!trial(done)) break;
    r.pass = done == count;
    r.detail = r.pass ? std::to_string(count) + " trials" : "falsified at trial " + std::to_string(done);
  } catch (const std::exception& e) {
    r.detail = "exception at trial " + std::to_string(done) + ": " + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

Ring random_ring(std::mt19937_64& rng, bool with_t) {
  static const std::uint32_t primes[] = {3, 5, 7};
  return Ring(1 + rng() % 3, 1 + rng() % 3, with_t, PrimeField(primes[rng() % 3]));
}

// A random element of A_s: expansion of a random generator expression.
Poly random_supersymmetric(const Ring& R, std::mt19937_64& rng) {
  return expand(random_genexpr(R, 8, rng), R);
}

}  // namespace

std::vector<SuiteResult> run_properties(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SuiteResult> out;

  out.push_back(property("ring laws", 300, [&](std::size_t) {
    const Ring R = random_ring(rng, rng() % 2);
    const Poly f = random_poly(R, 4, 3, rng), g = random_poly(R, 4, 3, rng), h = random_poly(R, 4, 3, rng);
    return f * g == g * f && (f * g) * h == f * (g * h) && f * (g + h) == f * g + f * h && (f - f).is_zero() &&
           f + (-f) == Poly(R);
  }));

  out.push_back(property("Frobenius: f^p has every exponent scaled by p", 100, [&](std::size_t) {
    const Ring R = random_ring(rng, false);
    const Poly f = random_poly(R, 3, 2, rng);
    Poly frob(R);
    for (const auto& [mono, c] : f.terms()) {
      Monomial q(R.nvars());
      for (std::size_t i = 0; i < R.nvars(); ++i) q.set(i, mono[i] * R.p());
      frob.add_term(q, c);
    }
    return pow(f, R.p()) == frob;
  }));

  out.push_back(property("polynomial text round-trip", 300, [&](std::size_t) {
    const Ring R = random_ring(rng, rng() % 2);
    const Poly f = random_poly(R, 5, 4, rng);
    const std::string text = format_poly(f);
    return parse_poly(text, R) == f && format_poly(parse_poly(text, R)) == text;
  }));

  out.push_back(property("psi is a ring homomorphism", 200, [&](std::size_t) {
    const Ring R = random_ring(rng, false);
    const Poly f = random_poly(R, 3, 3, rng), g = random_poly(R, 3, 3, rng);
    return psi(f * g) == psi(f) * psi(g) && psi(f + g) == psi(f) + psi(g);
  }));

  out.push_back(property("d/dT is a derivation", 200, [&](std::size_t) {
    const Ring R = random_ring(rng, true);
    const Poly f = random_poly(R, 3, 3, rng), g = random_poly(R, 3, 3, rng);
    return d_dT(f * g) == d_dT(f) * g + f * d_dT(g);
  }));

  out.push_back(property("symmetric rewrite round-trip", 150, [&](std::size_t) {
    const Ring R = random_ring(rng, false);
    const Block B = rng() % 2 ? Block::X : Block::Y;
    Poly f(R);
    for (unsigned t = 0; t < 3; ++t) {
      std::vector<std::uint32_t> lambda;
      for (unsigned i = 0; i < block_size(R, B); ++i) lambda.push_back(rng() % 4);
      f += orbit_sym(lambda, B, R) * R.field.from_int(static_cast<std::int64_t>(1 + rng() % (R.p() - 1)));
    }
    const Family fam = rng() % 2 ? Family::Elementary : Family::Complete;
    return expand_family(rewrite_symmetric(f, B, fam), R) == f;
  }));

  out.push_back(property("generator expression text round-trip", 300, [&](std::size_t) {
    const Ring R = random_ring(rng, false);
    const GenExpr e = random_genexpr(R, 12, rng);
    return parse_genexpr(format_genexpr(e), R) == e;
  }));

  out.push_back(property("A_s is closed under + and *", 100, [&](std::size_t) {
    const Ring R(1 + rng() % 2, 1 + rng() % 2, rng() % 2 ? 3 : 5);
    const Poly f = random_supersymmetric(R, rng), g = random_supersymmetric(R, rng);
    return is_supersymmetric(f).overall && is_supersymmetric(f + g).overall && is_supersymmetric(f * g).overall;
  }));

  out.push_back(property("generator images are supersymmetric", 60, [&](std::size_t) {
    const Ring R = random_ring(rng, false);
    const unsigned k = 1 + rng() % (R.p() - 1);
    return is_supersymmetric(c_r(1 + rng() % 6, R)).overall && is_supersymmetric(u_k(k, R)).overall &&
           is_supersymmetric(sigma_x_p(1 + rng() % R.m, R)).overall &&
           is_supersymmetric(sigma_y_p(1 + rng() % R.n, R)).overall;
  }));

  out.push_back(property("dim A_s(0|n) counts partitions with <= n parts", 40, [&](std::size_t t) {
    const unsigned n = 1 + t % 3;
    const std::uint32_t d = static_cast<std::uint32_t>(t % 9);
    return as_dimension(0, n, 3, d) == partitions(d, n).size();
  }));

  out.push_back(property("dimension reports are deterministic", 10, [&](std::size_t t) {
    const std::uint32_t d = static_cast<std::uint32_t>(3 + t);
    return format_csv_row(dim_report(2, 1, 3, d)) == format_csv_row(dim_report(2, 1, 3, d));
  }));

  out.push_back(property("psi(w) check rejects a sign error in w", 60, [&](std::size_t t) {
    const std::uint32_t p = t % 2 ? 5 : 3;
    const Ring R(1 + t % 3, 1 + (t / 3) % 3, p);
    const KSeq ks(R.field, 1 + static_cast<unsigned>(t % (p - 1)));
    const Poly w = w_poly(ks, R);
    return psi_w_check(w, ks) && !psi_w_check(-w, ks);
  }));

  return out;
}

}  // namespace ssym::checks
