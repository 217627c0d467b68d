#pragma once

// Quantum multiplication by c₁ for the benchmark spaces, from tabulated
// quantum products (class A weighted by e^{−∫_A ω}), and multiset matching
// of its spectrum against critical values.

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace lgwb {

struct C1Matrix {
    Eigen::MatrixXcd entries;  // column j = c₁ * basis_j
    std::vector<std::string> basis_labels;
    std::string space_label;
};

// Basis (1, H, ..., Hⁿ); c₁ = (n+1)H, H*Hⁿ = e^{−Λ}.
C1Matrix c1_matrix_cpn(int n, double lambda);

// Basis (1, H₁, H₂, H₁H₂); Hᵢ*Hᵢ = e^{−Λᵢ}, c₁ = 2H₁ + 2H₂.
C1Matrix c1_matrix_p1p1(double lambda1, double lambda2);

// Ascending coefficients of det(λ − M) by the Faddeev–LeVerrier recursion.
std::vector<std::complex<double>> char_poly(const Eigen::MatrixXcd& m);
std::vector<std::complex<double>> char_poly(const C1Matrix& m);

std::vector<std::complex<double>> eigenvalues(const C1Matrix& m);

struct MatchedPair {
    std::complex<double> a;
    std::complex<double> b;
    double distance = 0.0;
};

struct MultisetMatch {
    std::vector<MatchedPair> pairs;
    double max_distance = 0.0;
    std::vector<std::complex<double>> unmatched_a;
    std::vector<std::complex<double>> unmatched_b;

    bool perfect() const { return unmatched_a.empty() && unmatched_b.empty(); }
};

// Greedy nearest pairing refined by pair swaps to a local minimum of total
// distance. Pairs farther apart than tol are reported as unmatched on both sides.
MultisetMatch match_multisets(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b,
                              double tol);

} // namespace lgwb
