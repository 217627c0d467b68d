#pragma once

// Random inputs shared by the property tests and the acceptance binary.

#include "lgwb/laurent.hpp"
#include "lgwb/substitution.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace test {

using lgwb::Complex;
using lgwb::IntMatrix;
using lgwb::LaurentPoly;
using lgwb::LaurentRational;
using lgwb::ParamCoeff;
using lgwb::Rational;
using lgwb::SubstitutionMap;

using Rng = std::mt19937_64;

inline LaurentPoly random_poly(Rng& rng, int max_terms, int span = 2, bool allow_zero = true)
{
    std::uniform_int_distribution<int> terms(allow_zero ? 0 : 1, max_terms), ex(-span, span), num(-4, 4),
        den(1, 3), qp(0, 2);
    LaurentPoly p(2, 1);
    while (true) {
        const int n = terms(rng);
        for (int t = 0; t < n; ++t) {
            int c = num(rng);
            if (c == 0) c = 1;
            p.add_term({ex(rng), ex(rng)}, ParamCoeff::parameter(0, qp(rng), Rational(c, den(rng))));
        }
        if (allow_zero || !p.is_zero()) return p;
    }
}

inline LaurentRational random_assignment(Rng& rng)
{
    auto num = random_poly(rng, 2, 1, false);
    if (std::bernoulli_distribution(0.5)(rng)) return LaurentRational(num);
    auto den = random_poly(rng, 1, 1, false);
    den.add_term({0, 0}, 1);
    if (den.is_zero()) den = LaurentPoly::constant(1, 2, 1);
    return LaurentRational(num, den);
}

inline SubstitutionMap random_map(Rng& rng)
{
    return SubstitutionMap({random_assignment(rng), random_assignment(rng)}, 2, 1);
}

inline std::vector<Complex> random_point(Rng& rng, std::size_t n)
{
    std::uniform_real_distribution<double> r(0.6, 1.6), t(-M_PI, M_PI);
    std::vector<Complex> z;
    for (std::size_t i = 0; i < n; ++i) z.push_back(std::polar(r(rng), t(rng)));
    return z;
}

inline IntMatrix random_unimodular(Rng& rng)
{
    std::uniform_int_distribution<int> k(-2, 2);
    return lgwb::multiply(IntMatrix{{1, k(rng)}, {0, 1}}, IntMatrix{{1, 0}, {k(rng), 1}});
}

inline double magnitude(const LaurentPoly& p, std::span<const Complex> z, std::span<const Complex> params)
{
    double s = 0.0;
    for (const auto& [e, c] : p.terms()) s += std::abs(lgwb::eval(LaurentPoly::monomial(e, c, p.nparams()), z, params));
    return s;
}


} // namespace test
