#pragma once

#include "lgwb/critical.hpp"
#include "lgwb/error.hpp"
#include "lgwb/polytope.hpp"
#include "lgwb/qcoh.hpp"
#include "lgwb/superpotential.hpp"

#include <algorithm>
#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace test {

using lgwb::Complex;
using lgwb::Rational;

inline std::string read(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline lgwb::LatticePolytope data_polytope(const std::string& name)
{
    return lgwb::parse_polytope(read(std::string(LGWB_DATA_DIR) + "/" + name));
}

inline lgwb::Facet facet(std::vector<std::int64_t> normal, Rational offset)
{
    return {std::move(normal), std::move(offset)};
}

// Largest distance in the best pairing of two equal-size multisets, by brute
// force over permutations (small sizes only). Independent of match_multisets.
inline double brute_match(std::vector<Complex> a, std::vector<Complex> b)
{
    if (a.size() != b.size()) return 1e300;
    std::vector<std::size_t> perm(b.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    double best = 1e300;
    do {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline std::vector<Complex> roots_of_unity_times(Complex scale, int n)
{
    std::vector<Complex> out;
    for (int k = 0; k < n; ++k) out.push_back(scale * std::polar(1.0, 2 * M_PI * k / n));
    return out;
}

} // namespace test
