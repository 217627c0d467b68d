#pragma once

#include "lgwb/polytope.hpp"
#include "lgwb/superpotential.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lgwb {

struct CriticalPoint {
    std::vector<Complex> z;
    Complex value;
    double residual = 0.0;  // max_i |z_i ∂W/∂z_i|
    std::optional<bool> in_domain;
    int basin_count = 1;     // seeds that converged to this point
    bool degenerate = false; // Hessian of W in log coordinates is singular
};

struct SolverConfig {
    // Explicit seed radii per variable (Cartesian product). Empty: derived
    // from the domain polytope, or from coefficient magnitudes without one.
    std::vector<std::vector<double>> grid_radii;
    int grid_angles = 8;
    double newton_tol = 1e-12;
    int max_iter = 100;
    double dedup_tol = 1e-6;
    std::uint64_t rng_seed = 0;

    void validate() const;  // throws InputError
};

struct CriticalSet {
    std::vector<CriticalPoint> points;  // sorted by value (re, im), then coordinates
    std::size_t seeds = 0;
    std::size_t converged = 0;
    std::string diagnostic;             // set when nothing converged
};

// [z_1 ∂W/∂z_1, ..., z_n ∂W/∂z_n].
std::vector<NumericPoly> gradient_system(const NumericPoly& w);
std::vector<NumericPoly> gradient_system(const Superpotential& w);

// Multistart Newton in x = log z. Points are merged modulo 2πi within dedup_tol.
CriticalSet solve_critical(const NumericPoly& w, const SolverConfig& cfg,
                           const LatticePolytope* domain = nullptr);
CriticalSet solve_critical(const Superpotential& w, const SolverConfig& cfg);

// Critical points of the Hirzebruch potential by elimination: z_2 solves
// z_2^{m−2}(z_2² − e^{−B})² = m² e^{−A}, then z_1 = m e^{−A} z_2^{1−m}/(z_2² − e^{−B}).
// Returns max(m+2, 4) points (the cleared polynomial has degree 4 for m = 1).
std::vector<CriticalPoint> hirzebruch_critical(int m, double a, double b);

// Coefficients (ascending) of the univariate z_2 polynomial above, cleared of
// negative powers.
std::vector<Complex> hirzebruch_polynomial(int m, double a, double b);

// Sets in_domain on every point via strict contains_log.
std::vector<CriticalPoint> filter_in_domain(std::vector<CriticalPoint> points, const LatticePolytope& p,
                                            double tol = kDefaultLogTol);

std::size_t count_in_domain(const std::vector<CriticalPoint>& points);

std::vector<Complex> critical_values(const std::vector<CriticalPoint>& points);

} // namespace lgwb
