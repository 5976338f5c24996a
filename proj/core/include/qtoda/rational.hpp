#pragma once

#include <gmpxx.h>

#include <string>

namespace qtoda {

using Rational = mpq_class;

inline bool rat_is_zero(const Rational& x) { return sgn(x) == 0; }

// "p" or "p/q", q > 0, reduced.
std::string rational_to_string(const Rational& x);
Rational rational_from_string(const std::string& s);

}  // namespace qtoda
