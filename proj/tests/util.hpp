#pragma once

#include <string>

#include "ssym/poly.hpp"
#include "ssym/poly_io.hpp"

namespace testutil {

inline ssym::Poly P(const std::string& text, const ssym::Ring& ring) { return ssym::parse_poly(text, ring); }

inline std::string S(const ssym::Poly& f) { return ssym::format_poly(f); }

}  // namespace testutil
