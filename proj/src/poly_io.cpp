#include "ssym/poly_io.hpp"

#include <sstream>

#include "ssym/detail/text_cursor.hpp"
#include "ssym/errors.hpp"

namespace ssym {

namespace {

void write_factor(std::ostream& os, bool& first, const std::string& name, std::uint32_t e) {
  if (e == 0) return;
  if (!first) os << '*';
  first = false;
  os << name;
  if (e > 1) os << '^' << e;
}

}  // namespace

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  const Ring& R = f.ring();
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [mono, c] : f.terms()) {
    if (!first_term) os << " + ";
    first_term = false;
    bool first = true;
    if (c.value != 1 || mono.degree() == 0) {
      os << c.value;
      first = false;
    }
    for (unsigned i = 1; i <= R.m; ++i) write_factor(os, first, "x" + std::to_string(i), mono[R.x_slot(i)]);
    for (unsigned j = 1; j <= R.n; ++j) write_factor(os, first, "y" + std::to_string(j), mono[R.y_slot(j)]);
    if (R.has_t) write_factor(os, first, "T", mono[R.t_slot()]);
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring) : cur_(text), ring_(ring) {}

  Poly parse() {
    Poly result(ring_);
    bool negate = false;
    if (cur_.accept('-'))
      negate = true;
    else
      cur_.accept('+');
    for (;;) {
      Poly t = term();
      if (negate) t = -t;
      result += t;
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
  Poly term() {
    FpElem coeff = ring_.field.one();
    Monomial mono(ring_.nvars());
    if (cur_.at_digit()) {
      coeff = FpElem{static_cast<std::uint32_t>(cur_.natural_mod(ring_.p()))};
      if (!cur_.accept('*')) return Poly::term(ring_, mono, coeff);
    }
    factor(mono);
    while (cur_.accept('*')) factor(mono);
    return Poly::term(ring_, mono, coeff);
  }

  void factor(Monomial& mono) {
    std::size_t slot = 0;
    const auto at = cur_.position();
    if (cur_.accept('x')) {
      const auto i = cur_.natural();
      if (i < 1 || i > ring_.m) throw RingMismatch("variable x" + std::to_string(i) + " not in ring (offset " + std::to_string(at) + ")");
      slot = ring_.x_slot(static_cast<unsigned>(i));
    } else if (cur_.accept('y')) {
      const auto j = cur_.natural();
      if (j < 1 || j > ring_.n) throw RingMismatch("variable y" + std::to_string(j) + " not in ring (offset " + std::to_string(at) + ")");
      slot = ring_.y_slot(static_cast<unsigned>(j));
    } else if (cur_.accept('T')) {
      if (!ring_.has_t) throw RingMismatch("variable T not in ring (offset " + std::to_string(at) + ")");
      slot = ring_.t_slot();
    } else {
      cur_.fail("expected a variable");
    }
    std::uint64_t e = 1;
    if (cur_.accept('^')) e = cur_.natural();
    const std::uint64_t total = mono[slot] + e;
    if (total > 0xffffffffu) cur_.fail("exponent too large");
    mono.set(slot, static_cast<std::uint32_t>(total));
  }

  detail::TextCursor cur_;
  const Ring& ring_;
};

}  // namespace

Poly parse_poly(std::string_view text, const Ring& ring) { return PolyParser(text, ring).parse(); }

}  // namespace ssym
