#include "ssym/poly.hpp"

#include <algorithm>
#include <numeric>

#include "ssym/errors.hpp"

namespace ssym {

namespace {

void require_same_ring(const Ring& a, const Ring& b, const char* op) {
  if (!(a == b)) throw RingMismatch(std::string(op) + ": operands live in different rings");
}

}  // namespace

// Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  deg_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

void Monomial::set(std::size_t slot, std::uint32_t e) noexcept {
  deg_ = deg_ - exps_[slot] + e;
  exps_[slot] = e;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.deg_ += other.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  r.deg_ -= other.deg_;
  return r;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const noexcept {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  auto ea = a.exponents();
  auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

// Poly

Poly Poly::constant(const Ring& ring, FpElem c) {
  Poly f(ring);
  f.add_term(Monomial(ring.nvars()), c);
  return f;
}

Poly Poly::term(const Ring& ring, Monomial mono, FpElem c) {
  if (mono.size() != ring.nvars()) throw RingMismatch("monomial arity does not match ring");
  Poly f(ring);
  f.add_term(mono, c);
  return f;
}

Poly Poly::x(const Ring& ring, unsigned i) {
  if (i < 1 || i > ring.m) throw DomainError("x index out of range");
  Monomial mono(ring.nvars());
  mono.set(ring.x_slot(i), 1);
  return term(ring, std::move(mono), ring.field.one());
}

Poly Poly::y(const Ring& ring, unsigned j) {
  if (j < 1 || j > ring.n) throw DomainError("y index out of range");
  Monomial mono(ring.nvars());
  mono.set(ring.y_slot(j), 1);
  return term(ring, std::move(mono), ring.field.one());
}

Poly Poly::t(const Ring& ring) {
  if (!ring.has_t) throw DomainError("ring has no T variable");
  Monomial mono(ring.nvars());
  mono.set(ring.t_slot(), 1);
  return term(ring, std::move(mono), ring.field.one());
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

FpElem Poly::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? FpElem{} : it->second;
}

const std::pair<const Monomial, FpElem>& Poly::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomial("leading term of the zero polynomial");
  return *terms_.begin();
}

std::optional<std::uint64_t> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

bool Poly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

void Poly::add_term(const Monomial& mono, FpElem c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second = ring_.field.add(it->second, c);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::add_scaled(FpElem c, const Poly& g, const Monomial* mono) {
  require_same_ring(ring_, g.ring_, "add");
  if (c.is_zero()) return;
  if (&g == this) {
    const Poly copy = g;
    add_scaled(c, copy, mono);
    return;
  }
  const auto& F = ring_.field;
  for (const auto& [m, a] : g.terms_) add_term(mono ? m * *mono : m, F.mul(c, a));
}

Poly& Poly::operator+=(const Poly& g) {
  add_scaled(ring_.field.one(), g);
  return *this;
}

Poly& Poly::operator-=(const Poly& g) {
  add_scaled(ring_.field.neg(ring_.field.one()), g);
  return *this;
}

Poly& Poly::operator*=(FpElem c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, a] : terms_) a = ring_.field.mul(a, c);
  return *this;
}

Poly& Poly::operator*=(const Poly& g) {
  *this = *this * g;
  return *this;
}

Poly operator*(const Poly& f, const Poly& g) {
  require_same_ring(f.ring_, g.ring_, "mul");
  Poly r(f.ring_);
  const auto& F = f.ring_.field;
  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) r.add_term(mf * mg, F.mul(cf, cg));
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, a] : r.terms_) a = ring_.field.neg(a);
  return r;
}

// Free operations

Poly pow(const Poly& f, std::uint64_t e) {
  Poly result = Poly::constant(f.ring(), f.field().one());
  Poly base = f;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly substitute(const Poly& f, const Ring& target, std::span<const Poly> images) {
  if (images.size() != f.ring().nvars())
    throw RingMismatch("substitute: expected one image per variable");
  for (const auto& img : images)
    if (!(img.ring() == target)) throw RingMismatch("substitute: image outside target ring");
  if (!(target.field == f.field())) throw RingMismatch("substitute: characteristic differs");

  // powers[v][e] = images[v]^e, filled lazily
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t v, std::uint32_t e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly::constant(target, target.field.one()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  Poly result(target);
  for (const auto& [mono, c] : f.terms()) {
    Poly t = Poly::constant(target, c);
    for (std::size_t v = 0; v < mono.size() && !t.is_zero(); ++v)
      if (mono[v]) t *= power(v, mono[v]);
    result += t;
  }
  return result;
}

Poly psi(const Poly& f) {
  const Ring& R = f.ring();
  if (R.has_t) throw DomainError("psi: input ring already carries T");
  if (R.m == 0 || R.n == 0) throw DomainError("psi: needs m >= 1 and n >= 1");
  Ring target = R.psi_target();
  Poly r(target);
  for (const auto& [mono, c] : f.terms()) {
    std::vector<std::uint32_t> e(target.nvars(), 0);
    for (unsigned i = 1; i < R.m; ++i) e[target.x_slot(i)] = mono[R.x_slot(i)];
    for (unsigned j = 1; j < R.n; ++j) e[target.y_slot(j)] = mono[R.y_slot(j)];
    e[target.t_slot()] = mono[R.x_slot(R.m)] + mono[R.y_slot(R.n)];
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Poly d_dT(const Poly& g) {
  const Ring& R = g.ring();
  if (!R.has_t) throw DomainError("d_dT: ring has no T");
  Poly r(R);
  const auto slot = R.t_slot();
  for (const auto& [mono, c] : g.terms()) {
    const auto e = mono[slot];
    if (e == 0) continue;
    FpElem k = R.field.mul(c, R.field.from_int(e));
    if (k.is_zero()) continue;
    Monomial m2 = mono;
    m2.set(slot, e - 1);
    r.add_term(m2, k);
  }
  return r;
}

Poly set_xm_zero(const Poly& f) {
  const Ring& R = f.ring();
  if (R.m == 0) throw DomainError("set_xm_zero: ring has no x variables");
  Ring target(R.m - 1, R.n, R.has_t, R.field);
  Poly r(target);
  const auto drop = R.x_slot(R.m);
  for (const auto& [mono, c] : f.terms()) {
    if (mono[drop] != 0) continue;
    std::vector<std::uint32_t> e(mono.exponents().begin(), mono.exponents().end());
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(drop));
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Poly exact_monomial_div(const Poly& f, const Monomial& d) {
  if (d.size() != f.ring().nvars()) throw RingMismatch("exact_monomial_div: monomial arity");
  Poly r(f.ring());
  for (const auto& [mono, c] : f.terms()) {
    if (!d.divides(mono)) throw DivisibilityError("exact_monomial_div: a term is not divisible");
    r.add_term(mono / d, c);
  }
  return r;
}

std::vector<std::pair<std::uint64_t, Poly>> homogeneous_components(const Poly& f) {
  std::map<std::uint64_t, Poly> by_degree;
  for (const auto& [mono, c] : f.terms())
    by_degree.try_emplace(mono.degree(), f.ring()).first->second.add_term(mono, c);
  std::vector<std::pair<std::uint64_t, Poly>> out;
  out.reserve(by_degree.size());
  for (auto& [d, p] : by_degree) out.emplace_back(d, std::move(p));
  return out;
}

Poly times_t_power(const Poly& g, std::uint32_t e) {
  const Ring& R = g.ring();
  if (!R.has_t) throw DomainError("times_t_power: ring has no T");
  Monomial shift(R.nvars());
  shift.set(R.t_slot(), e);
  Poly r(R);
  r.add_scaled(R.field.one(), g, &shift);
  return r;
}

Poly with_t(const Poly& f) {
  const Ring& R = f.ring();
  if (R.has_t) return f;
  Ring target(R.m, R.n, true, R.field);
  Poly r(target);
  for (const auto& [mono, c] : f.terms()) {
    std::vector<std::uint32_t> e(mono.exponents().begin(), mono.exponents().end());
    e.push_back(0);
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

}  // namespace ssym
