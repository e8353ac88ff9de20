#pragma once

#include <string>

#include <gmpxx.h>

namespace cctri {

// Exact rational arithmetic; always kept in canonical form.
using Rational = mpq_class;

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace cctri
