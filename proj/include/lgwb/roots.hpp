#pragma once

#include <complex>
#include <span>
#include <vector>

namespace lgwb {

// All roots of Σ coeffs[k] x^k (ascending order, leading coefficient
// nonzero, degree ≥ 1), with multiplicity, by Durand–Kerner iteration.
// Every returned root satisfies |p(r)| ≤ tol · Σ|a_k||r|^k; otherwise
// NumericError is thrown.
std::vector<std::complex<double>> poly_roots(std::span<const std::complex<double>> coeffs, double tol = 1e-12,
                                             int max_iter = 2000);

// Ascending coefficients of Π (x − r).
std::vector<std::complex<double>> poly_from_roots(std::span<const std::complex<double>> roots);

std::complex<double> horner(std::span<const std::complex<double>> coeffs, std::complex<double> x);

} // namespace lgwb
