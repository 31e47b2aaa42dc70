#include "ssym/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ssym/errors.hpp"
#include "ssym/symfun.hpp"

namespace ssym {

Poly c_r(unsigned r, const Ring& ring) {
  Poly result(ring);
  const auto& F = ring.field;
  for (unsigned i = 0; i <= std::min(r, ring.m); ++i) {
    Poly t = elementary(i, Block::X, ring) * complete(r - i, Block::Y, ring);
    result.add_scaled((r - i) % 2 ? F.neg(F.one()) : F.one(), t);
  }
  return result;
}

Poly sigma_x_p(unsigned i, const Ring& ring) {
  if (i < 1 || i > ring.m) throw DomainError("sigma_x_p: index must lie in [1, m]");
  return pow(elementary(i, Block::X, ring), ring.p());
}

Poly sigma_y_p(unsigned j, const Ring& ring) {
  if (j < 1 || j > ring.n) throw DomainError("sigma_y_p: index must lie in [1, n]");
  return pow(elementary(j, Block::Y, ring), ring.p());
}

Poly u_k(unsigned k, const Ring& ring) {
  if (k == 0 || k >= ring.p()) throw DomainError("u_k: k must satisfy 0 < k < p");
  if (ring.n == 0) throw DomainError("u_k: needs n >= 1");
  Monomial mono(ring.nvars());
  for (unsigned i = 1; i <= ring.m; ++i) mono.set(ring.x_slot(i), k);
  for (unsigned j = 1; j <= ring.n; ++j) mono.set(ring.y_slot(j), ring.p() - k);
  return Poly::term(ring, std::move(mono), ring.field.one());
}

// KSeq

KSeq::KSeq(const PrimeField& field, unsigned k) : p_(field.characteristic()), k_(k) {
  if (k == 0 || k >= p_) throw DomainError("KSeq: k must satisfy 0 < k < p");
  const long p = p_, kk = k;
  const long s = (kk + (p - kk) - 1) / (p - kk);
  s_ = static_cast<unsigned>(s);
  auto check = [&](bool ok, const char* what) {
    if (!ok) throw InternalInvariantViolation(std::string("KSeq(p=") + std::to_string(p) + ", k=" + std::to_string(k) + "): " + what);
  };
  std::vector<long> kv;
  for (long i = 0; i < s; ++i) kv.push_back((i + 1) * kk - i * p);
  const long kp = s * p - (s + 1) * kk;
  check(s >= 1 && s < p, "s must lie in [1, p)");
  for (long v : kv) check(v > 0, "k_i must be positive");
  check(kp >= 0, "k_p must be nonnegative");
  for (long i = 1; i < s; ++i) check(kv[i] + (p - kk) == kv[i - 1], "k_i + (p-k) = k_(i-1)");
  check(kp + kk == s * (p - kk), "k_p + k = s(p-k)");
  for (long i = 0; i < s; ++i) check(kv[i] + kp == (s - i) * (p - kk), "k_i + k_p = (s-i)(p-k)");
  for (long v : kv) kvals_.push_back(static_cast<std::uint32_t>(v));
  kp_ = static_cast<std::uint32_t>(kp);
}

// DeltaSeq

DeltaSeq::DeltaSeq(std::vector<unsigned> entries) : entries_(std::move(entries)) {
  if (!std::is_sorted(entries_.begin(), entries_.end())) throw DomainError("DeltaSeq: entries must be nondecreasing");
  if (!entries_.empty() && entries_.front() == 0) throw DomainError("DeltaSeq: entries must be positive");
}

unsigned DeltaSeq::weight() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0u); }

std::vector<unsigned> DeltaSeq::support() const {
  std::vector<unsigned> s = entries_;
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

DeltaSeq DeltaSeq::without(unsigned value) const {
  auto e = entries_;
  auto it = std::find(e.begin(), e.end(), value);
  if (it == e.end()) throw DomainError("DeltaSeq::without: value not present");
  e.erase(it);
  return DeltaSeq(std::move(e));
}

std::vector<DeltaSeq> enumerate_deltas(unsigned s, unsigned max_weight) {
  if (s == 0) throw DomainError("enumerate_deltas: s must be positive");
  std::vector<DeltaSeq> out;
  std::vector<unsigned> cur;
  for (unsigned len = 0; len < s; ++len) {
    auto rec = [&](auto&& self, unsigned lo, unsigned weight) -> void {
      if (cur.size() == len) {
        out.emplace_back(cur);
        return;
      }
      for (unsigned v = lo; v < s; ++v) {
        if (weight + v > max_weight) break;
        cur.push_back(v);
        self(self, v, weight + v);
        cur.pop_back();
      }
    };
    rec(rec, 1, 0);
  }
  return out;
}

// Brackets

namespace {

// Slot classes for placement_sym.
constexpr unsigned kClassK = 0;      // plain k (x) or p-k (y)
constexpr unsigned kClassL = 1;      // l(p-k) (x) or k_p (y)
constexpr unsigned kClassDelta = 2;  // k_i is class kClassDelta + i

void check_delta(const DeltaSeq& delta, const KSeq& ks) {
  for (unsigned i : delta.entries())
    if (i >= ks.s()) throw DomainError("bracket: Delta entries must lie in [1, s-1]");
}

void check_level(unsigned M, unsigned N, const Ring& ring) {
  if (M > ring.m || N > ring.n) throw DomainError("bracket: level exceeds the ring");
}

std::vector<SlotFactor> delta_factors(const DeltaSeq& delta, const KSeq& ks) {
  std::vector<SlotFactor> f;
  for (unsigned i : delta.entries()) f.push_back({kClassDelta + i, ks.kval(i)});
  return f;
}

std::vector<SlotFactor> repeat(unsigned count, SlotFactor f) { return std::vector<SlotFactor>(count, f); }

std::vector<SlotFactor> concat(std::vector<SlotFactor> a, const std::vector<SlotFactor>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Poly x_part_plain(const DeltaSeq& delta, unsigned M, const KSeq& ks, const Ring& ring) {
  const auto t = static_cast<unsigned>(delta.size());
  auto factors = concat(repeat(M - t, {kClassK, ks.k()}), delta_factors(delta, ks));
  return placement_sym(factors, Block::X, ring, M);
}

Poly y_part_plain(unsigned count, unsigned N, const KSeq& ks, const Ring& ring) {
  return placement_sym(repeat(count, {kClassK, ks.p() - ks.k()}), Block::Y, ring, N);
}

}  // namespace

Poly bracket_round(const DeltaSeq& delta, int j, unsigned M, unsigned N, const KSeq& ks, const Ring& ring) {
  check_delta(delta, ks);
  check_level(M, N, ring);
  if (delta.size() > M || j < 0 || j >= static_cast<int>(N)) return Poly(ring);
  const unsigned ju = static_cast<unsigned>(j);
  auto y_factors = repeat(N - ju - 1, {kClassK, ks.p() - ks.k()});
  y_factors.push_back({kClassL, ks.kp()});
  return x_part_plain(delta, M, ks, ring) * placement_sym(y_factors, Block::Y, ring, N);
}

Poly bracket_square(const DeltaSeq& delta, int j, unsigned M, unsigned N, const KSeq& ks, const Ring& ring) {
  check_delta(delta, ks);
  check_level(M, N, ring);
  if (delta.size() > M || j < 0 || j > static_cast<int>(N)) return Poly(ring);
  return x_part_plain(delta, M, ks, ring) * y_part_plain(N - static_cast<unsigned>(j), N, ks, ring);
}

Poly bracket_brace(const DeltaSeq& delta, unsigned l, int j, unsigned M, unsigned N, const KSeq& ks, const Ring& ring) {
  check_delta(delta, ks);
  check_level(M, N, ring);
  if (delta.size() >= M || j < 0 || j > static_cast<int>(N)) return Poly(ring);
  const auto t = static_cast<unsigned>(delta.size());
  auto x_factors = repeat(M - t - 1, {kClassK, ks.k()});
  x_factors.push_back({kClassL, l * (ks.p() - ks.k())});
  x_factors = concat(std::move(x_factors), delta_factors(delta, ks));
  return placement_sym(x_factors, Block::X, ring, M) * y_part_plain(N - static_cast<unsigned>(j), N, ks, ring);
}

Poly w_poly(const KSeq& ks, const Ring& ring) {
  if (ring.m < 1 || ring.n < 1) throw DomainError("w_poly: needs m, n >= 1");
  const auto& F = ring.field;
  const unsigned s = ks.s();
  auto sign = [&](unsigned e) { return e % 2 ? F.neg(F.one()) : F.one(); };

  Poly w(ring);
  // Zero brackets fill out the ranges 0 <= |Delta| <= l and "all Delta".
  for (unsigned l = 1; l + 1 <= s; ++l) {
    for (const auto& delta : enumerate_deltas(s, l)) {
      const unsigned wt = delta.weight();
      const FpElem c = F.mul(sign(wt + s + l), F.from_int(s - l));
      w.add_scaled(c, bracket_brace(delta, l, static_cast<int>(l - wt), ring.m, ring.n, ks, ring));
    }
  }
  for (const auto& delta : enumerate_deltas(s, s - 1)) {
    const unsigned wt = delta.weight();
    w.add_scaled(sign(wt), bracket_round(delta, static_cast<int>(s - 1 - wt), ring.m, ring.n, ks, ring));
  }
  return w;
}

Poly v_k(const KSeq& ks, const Ring& ring) {
  if (ring.m < 1 || ring.n < 1) throw DomainError("v_k: needs m, n >= 1");
  if (ks.p() != ring.p()) throw RingMismatch("v_k: KSeq characteristic differs from ring");
  const auto& F = ring.field;
  const unsigned s = ks.s();
  FpElem coef = F.inv(F.from_int(s));
  if (s % 2) coef = F.neg(coef);

  std::vector<std::uint32_t> x_exps(ring.m - 1, ks.k());
  Poly base = orbit_sym(x_exps, Block::X, ring);
  Monomial y_prod(ring.nvars());
  for (unsigned j = 1; j <= ring.n; ++j) y_prod.set(ring.y_slot(j), ks.p() - ks.k());
  base = base * Poly::term(ring, y_prod, F.one());

  Poly v = w_poly(ks, ring) * coef;
  v += base;
  return v;
}

Poly psi_w_closed_form(const KSeq& ks, const Ring& ring) {
  if (ring.m < 1 || ring.n < 1) throw DomainError("psi_w_closed_form: needs m, n >= 1");
  const Ring target = ring.psi_target();
  const auto& F = ring.field;
  FpElem c = F.from_int(ks.s());
  if ((ks.s() + 1) % 2) c = F.neg(c);
  Poly sq = bracket_square(DeltaSeq{}, 0, target.m, target.n, ks, target);
  return times_t_power(sq, ks.p() - ks.k()) * c;
}

}  // namespace ssym
