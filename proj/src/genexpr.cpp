#include "ssym/genexpr.hpp"

#include <algorithm>
#include <sstream>

#include "ssym/detail/text_cursor.hpp"
#include "ssym/errors.hpp"
#include "ssym/generators.hpp"
#include "ssym/symfun.hpp"

namespace ssym {

std::uint64_t symbol_degree(const GenSymbol& s, const Ring& level) {
  const std::uint64_t p = level.p();
  switch (s.kind) {
    case GenKind::C: return s.index;
    case GenKind::EX:
    case GenKind::EY: return p * s.index;
    case GenKind::U: return std::uint64_t{level.m} * s.index + std::uint64_t{level.n} * (p - s.index);
  }
  return 0;
}

void validate_symbol(const GenSymbol& s, const Ring& level) {
  const bool ok = [&] {
    switch (s.kind) {
      case GenKind::C: return true;
      case GenKind::EX: return s.index >= 1 && s.index <= level.m;
      case GenKind::EY: return s.index >= 1 && s.index <= level.n;
      case GenKind::U: return s.index >= 1 && s.index < level.p() && level.n >= 1;
    }
    return false;
  }();
  if (!ok)
    throw DomainError("generator " + symbol_name(s) + " does not exist at level (" + std::to_string(level.m) + "|" +
                      std::to_string(level.n) + "), p=" + std::to_string(level.p()));
}

std::string symbol_name(const GenSymbol& s) {
  static constexpr const char* names[] = {"C", "EX", "EY", "U"};
  return std::string(names[static_cast<int>(s.kind)]) + "[" + std::to_string(s.index) + "]";
}

// GenMonomial

GenMonomial::GenMonomial(GenSymbol s, std::uint32_t e) {
  if (e) factors_.emplace_back(s, e);
}

GenMonomial GenMonomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  GenMonomial r;
  for (const auto& [s, e] : factors) {
    if (e == 0) continue;
    if (!r.factors_.empty() && r.factors_.back().first == s)
      r.factors_.back().second += e;
    else
      r.factors_.emplace_back(s, e);
  }
  return r;
}

std::uint64_t GenMonomial::degree(const Ring& level) const {
  std::uint64_t d = 0;
  for (const auto& [s, e] : factors_) d += symbol_degree(s, level) * e;
  return d;
}

GenMonomial GenMonomial::operator*(const GenMonomial& other) const {
  auto f = factors_;
  f.insert(f.end(), other.factors_.begin(), other.factors_.end());
  return from_factors(std::move(f));
}

bool GenOrder::operator()(const GenMonomial& a, const GenMonomial& b) const {
  const auto da = a.degree(level_), db = b.degree(level_);
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    // Exponent of the smallest pending symbol in each monomial.
    GenSymbol s;
    if (j >= fb.size() || (i < fa.size() && fa[i].first < fb[j].first))
      s = fa[i].first;
    else
      s = fb[j].first;
    const std::uint32_t ea = (i < fa.size() && fa[i].first == s) ? fa[i++].second : 0;
    const std::uint32_t eb = (j < fb.size() && fb[j].first == s) ? fb[j++].second : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

// GenExpr

GenExpr GenExpr::constant(const Ring& level, FpElem c) {
  GenExpr e(level);
  e.add_term(GenMonomial{}, c);
  return e;
}

GenExpr GenExpr::symbol(const Ring& level, GenSymbol s, std::uint32_t k) {
  validate_symbol(s, level);
  GenExpr e(level);
  e.add_term(GenMonomial(s, k), level.field.one());
  return e;
}

void GenExpr::add_term(const GenMonomial& mono, FpElem c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second = level_.field.add(it->second, c);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GenExpr& GenExpr::operator+=(const GenExpr& other) {
  if (!(level_ == other.level_)) throw RingMismatch("GenExpr: levels differ");
  if (&other == this) return *this *= level_.field.from_int(2);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GenExpr& GenExpr::operator*=(FpElem c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, a] : terms_) a = level_.field.mul(a, c);
  return *this;
}

GenExpr operator*(const GenExpr& a, const GenExpr& b) {
  if (!(a.level_ == b.level_)) throw RingMismatch("GenExpr: levels differ");
  GenExpr r(a.level_);
  const auto& F = a.level_.field;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, F.mul(ca, cb));
  return r;
}

GenExpr pow(const GenExpr& e, std::uint64_t k) {
  GenExpr r = GenExpr::constant(e.level(), e.level().field.one());
  for (std::uint64_t i = 0; i < k; ++i) r = r * e;
  return r;
}

// Text

std::string format_genexpr(const GenExpr& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [mono, c] : e.terms()) {
    if (!first_term) os << " + ";
    first_term = false;
    bool first = true;
    if (c.value != 1 || mono.is_one()) {
      os << c.value;
      first = false;
    }
    for (const auto& [s, k] : mono.factors()) {
      if (!first) os << '*';
      first = false;
      os << symbol_name(s);
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

namespace {

class GenParser {
 public:
  GenParser(std::string_view text, const Ring& level) : cur_(text), level_(level) {}

  GenExpr parse() {
    GenExpr result(level_);
    const auto& F = level_.field;
    bool negate = cur_.accept('-');
    if (!negate) cur_.accept('+');
    for (;;) {
      auto [mono, c] = term();
      result.add_term(mono, negate ? F.neg(c) : c);
      if (cur_.accept('+'))
        negate = false;
      else if (cur_.accept('-'))
        negate = true;
      else
        break;
    }
    if (!cur_.at_end()) cur_.fail("unexpected character");
    return result;
  }

 private:
  std::pair<GenMonomial, FpElem> term() {
    FpElem c = level_.field.one();
    std::vector<GenMonomial::Factor> factors;
    if (cur_.at_digit()) {
      c = FpElem{static_cast<std::uint32_t>(cur_.natural_mod(level_.p()))};
      if (!cur_.accept('*')) return {GenMonomial{}, c};
    }
    factors.push_back(factor());
    while (cur_.accept('*')) factors.push_back(factor());
    return {GenMonomial::from_factors(std::move(factors)), c};
  }

  GenMonomial::Factor factor() {
    GenKind kind;
    if (cur_.accept("EX"))
      kind = GenKind::EX;
    else if (cur_.accept("EY"))
      kind = GenKind::EY;
    else if (cur_.accept('C'))
      kind = GenKind::C;
    else if (cur_.accept('U'))
      kind = GenKind::U;
    else
      cur_.fail("expected a generator symbol");
    cur_.expect('[');
    const auto idx = static_cast<unsigned>(cur_.natural());
    cur_.expect(']');
    std::uint32_t e = 1;
    if (cur_.accept('^')) e = static_cast<std::uint32_t>(cur_.natural());
    GenSymbol s{kind, idx};
    validate_symbol(s, level_);
    return {s, e};
  }

  detail::TextCursor cur_;
  const Ring& level_;
};

}  // namespace

GenExpr parse_genexpr(std::string_view text, const Ring& level) { return GenParser(text, level).parse(); }

// Expansion

const Poly& GeneratorPolys::symbol(const GenSymbol& s) { return power(s, 1); }

const Poly& GeneratorPolys::power(const GenSymbol& s, std::uint32_t e) {
  auto& cache = powers_[s];
  if (cache.empty()) {
    validate_symbol(s, level_);
    cache.push_back(Poly::constant(level_, level_.field.one()));
    switch (s.kind) {
      case GenKind::C: cache.push_back(c_r(s.index, level_)); break;
      case GenKind::EX: cache.push_back(sigma_x_p(s.index, level_)); break;
      case GenKind::EY: cache.push_back(sigma_y_p(s.index, level_)); break;
      case GenKind::U: cache.push_back(u_k(s.index, level_)); break;
    }
  }
  while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
  return cache[e];
}

Poly GeneratorPolys::monomial(const GenMonomial& m) {
  Poly r = Poly::constant(level_, level_.field.one());
  for (const auto& [s, e] : m.factors()) r *= power(s, e);
  return r;
}

Poly expand(const GenExpr& e, GeneratorPolys& cache) {
  if (!(e.level() == cache.level())) throw RingMismatch("expand: expression level differs from ring");
  Poly r(cache.level());
  for (const auto& [mono, c] : e.terms()) r.add_scaled(c, cache.monomial(mono));
  return r;
}

Poly expand(const GenExpr& e, const Ring& ring) {
  GeneratorPolys cache(ring);
  return expand(e, cache);
}

}  // namespace ssym
