#include "lgwb/roots.hpp"

#include "lgwb/error.hpp"

#include <algorithm>
#include <cmath>

namespace lgwb {

using Complex = std::complex<double>;

Complex horner(std::span<const Complex> coeffs, Complex x)
{
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

double rounding_scale(std::span<const Complex> coeffs, double r)
{
    double s = 0.0, rk = 1.0;
    for (const auto& c : coeffs) {
        s += std::abs(c) * rk;
        rk *= r;
    }
    return s;
}

} // namespace

std::vector<Complex> poly_roots(std::span<const Complex> coeffs, double tol, int max_iter)
{
    if (coeffs.size() < 2) throw InputError("poly_roots needs degree at least 1");
    const Complex lead = coeffs.back();
    if (lead == 0.0) throw InputError("poly_roots needs a nonzero leading coefficient");
    const std::size_t n = coeffs.size() - 1;

    std::vector<Complex> monic(coeffs.begin(), coeffs.end());
    for (auto& c : monic) c /= lead;

    // Cauchy bound on root moduli sets the radius of the starting circle.
    double bound = 0.0;
    for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(monic[k]));
    bound = 1.0 + bound;
    // Geometric mean of root moduli is a better radius when it is smaller.
    const double mean = std::pow(std::abs(monic[0]), 1.0 / static_cast<double>(n));
    const double radius = mean > 0.0 ? std::min(bound, mean) : 0.5 * bound;

    std::vector<Complex> z(n);
    const Complex seed(0.4, 0.9);
    Complex w = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        w *= seed;
        z[k] = radius * w / std::abs(w) * (1.0 + 0.01 * static_cast<double>(k) / static_cast<double>(n));
    }

    auto converged = [&]() {
        for (const auto& r : z) {
            const double scale = rounding_scale(monic, std::abs(r));
            if (std::abs(horner(monic, r)) > tol * scale) return false;
        }
        return true;
    };

    int polish = 3;
    for (int iter = 0; iter < max_iter; ++iter) {
        double biggest = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex denom = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (denom == 0.0) denom = 1e-300;
            const Complex step = horner(monic, z[i]) / denom;
            z[i] -= step;
            biggest = std::max(biggest, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (converged()) {
            if (polish-- == 0 || biggest == 0.0) return z;
        }
    }
    if (converged()) return z;
    throw NumericError("Durand-Kerner iteration did not converge");
}

std::vector<Complex> poly_from_roots(std::span<const Complex> roots)
{
    std::vector<Complex> c{1.0};
    for (const auto& r : roots) {
        std::vector<Complex> next(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return c;
}

} // namespace lgwb
