#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lgwb {

using Rational = mpq_class;

// Accepts "p/q", "n", or an exact decimal such as "-1.25".
Rational parse_rational(std::string_view text);

// Exact value of a finite double (every double is a dyadic rational).
Rational rational_from_double(double x);

std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

} // namespace lgwb
