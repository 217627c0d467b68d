#include "lgwb/qcoh.hpp"

#include "lgwb/error.hpp"
#include "lgwb/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lgwb {

using Complex = std::complex<double>;

C1Matrix c1_matrix_cpn(int n, double lambda)
{
    if (n < 1) throw InputError("CP^n needs n >= 1");
    if (!(lambda > 0)) throw InputError("lambda must be positive");
    const auto d = static_cast<Eigen::Index>(n + 1);
    C1Matrix m;
    m.entries = Eigen::MatrixXcd::Zero(d, d);
    const double c = n + 1.0;
    for (Eigen::Index i = 0; i + 1 < d; ++i) m.entries(i + 1, i) = c;
    m.entries(0, d - 1) = c * std::exp(-lambda);
    m.basis_labels.push_back("1");
    for (int i = 1; i <= n; ++i) m.basis_labels.push_back(i == 1 ? "H" : "H^" + std::to_string(i));
    m.space_label = "cp" + std::to_string(n);
    return m;
}

C1Matrix c1_matrix_p1p1(double lambda1, double lambda2)
{
    if (!(lambda1 > 0 && lambda2 > 0)) throw InputError("l1 and l2 must be positive");
    const double q1 = std::exp(-lambda1);
    const double q2 = std::exp(-lambda2);
    // Products in basis (1, H1, H2, H1H2):
    //   H1*1 = H1, H1*H1 = q1, H1*H2 = H1H2, H1*H1H2 = q1 H2, and symmetrically for H2.
    Eigen::MatrixXcd h1 = Eigen::MatrixXcd::Zero(4, 4);
    h1(1, 0) = 1.0;
    h1(0, 1) = q1;
    h1(3, 2) = 1.0;
    h1(2, 3) = q1;
    Eigen::MatrixXcd h2 = Eigen::MatrixXcd::Zero(4, 4);
    h2(2, 0) = 1.0;
    h2(3, 1) = 1.0;
    h2(0, 2) = q2;
    h2(1, 3) = q2;
    C1Matrix m;
    m.entries = 2.0 * h1 + 2.0 * h2;
    m.basis_labels = {"1", "H1", "H2", "H1H2"};
    m.space_label = "p1p1";
    return m;
}

std::vector<Complex> char_poly(const Eigen::MatrixXcd& a)
{
    if (a.rows() != a.cols()) throw InputError("char_poly needs a square matrix");
    const auto n = a.rows();
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[static_cast<std::size_t>(n)] = 1.0;
    Eigen::MatrixXcd mk = Eigen::MatrixXcd::Zero(n, n);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        mk = a * mk + c[static_cast<std::size_t>(n - k + 1)] * id;
        c[static_cast<std::size_t>(n - k)] = -(a * mk).trace() / static_cast<double>(k);
    }
    return c;
}

std::vector<Complex> char_poly(const C1Matrix& m)
{
    return char_poly(m.entries);
}

std::vector<Complex> eigenvalues(const C1Matrix& m)
{
    return poly_roots(char_poly(m));
}

MultisetMatch match_multisets(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol)
{
    // Greedy: repeatedly take the globally closest remaining pair.
    std::vector<bool> used_a(a.size(), false), used_b(b.size(), false);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::size_t k = std::min(a.size(), b.size());
    for (std::size_t step = 0; step < k; ++step) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (used_a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (used_b[j]) continue;
                const double d = std::abs(a[i] - b[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        used_a[bi] = used_b[bj] = true;
        pairs.emplace_back(bi, bj);
    }

    // Refine: swap partners between two pairs, or trade a matched element for
    // an unmatched one, while the total distance decreases.
    auto dist = [&](std::size_t i, std::size_t j) { return std::abs(a[i] - b[j]); };
    for (bool improved = true; improved;) {
        improved = false;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            for (std::size_t r = p + 1; r < pairs.size(); ++r) {
                auto& [i1, j1] = pairs[p];
                auto& [i2, j2] = pairs[r];
                if (dist(i1, j2) + dist(i2, j1) < dist(i1, j1) + dist(i2, j2)) {
                    std::swap(j1, j2);
                    improved = true;
                }
            }
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (used_a[i]) continue;
                if (dist(i, pairs[p].second) < dist(pairs[p].first, pairs[p].second)) {
                    used_a[pairs[p].first] = false;
                    used_a[i] = true;
                    pairs[p].first = i;
                    improved = true;
                }
            }
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (used_b[j]) continue;
                if (dist(pairs[p].first, j) < dist(pairs[p].first, pairs[p].second)) {
                    used_b[pairs[p].second] = false;
                    used_b[j] = true;
                    pairs[p].second = j;
                    improved = true;
                }
            }
        }
    }

    std::sort(pairs.begin(), pairs.end());
    MultisetMatch out;
    for (const auto& [i, j] : pairs) {
        const double d = dist(i, j);
        if (d > tol) {
            used_a[i] = used_b[j] = false;
            continue;
        }
        out.pairs.push_back({a[i], b[j], d});
        out.max_distance = std::max(out.max_distance, d);
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!used_a[i]) out.unmatched_a.push_back(a[i]);
    for (std::size_t j = 0; j < b.size(); ++j)
        if (!used_b[j]) out.unmatched_b.push_back(b[j]);
    return out;
}

} // namespace lgwb
