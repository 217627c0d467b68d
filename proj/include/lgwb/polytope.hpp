#pragma once

// Lattice polytopes in facet form: {φ ∈ ℝⁿ : ⟨ν(F),φ⟩ + α(F) ≥ 0 for all F}.
//
// Offsets α(F) are exact rationals in moment coordinates. The matching
// superpotential weight is exp(−2π α(F)) and the Log map is
// φ_i = −(1/2π) log|z_i|, so all lattice geometry stays exact and 2π only
// appears when numbers are evaluated.

#include "lgwb/lattice.hpp"
#include "lgwb/rational.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lgwb {

struct Facet {
    std::vector<std::int64_t> normal;  // primitive, inward pointing
    Rational offset;                   // α(F)
};

struct Vertex {
    std::vector<Rational> coords;
    std::vector<std::size_t> incident_facets;  // every facet active at the vertex
};

class LatticePolytope {
public:
    // Normalizes normals to primitive vectors (offsets scaled along) and
    // validates: nonzero normals, bounded, full-dimensional, irredundant.
    // Throws InputError on violation. With keep_redundant a facet whose
    // inequality is implied by the others is kept and listed instead; inflation
    // of a non-Fano polytope can push a facet out like that, and its term must
    // stay in the superpotential.
    LatticePolytope(std::size_t dim, std::vector<Facet> facets, std::string name = {}, bool keep_redundant = false);

    std::size_t dim() const { return dim_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::string& name() const { return name_; }

    // Sorted lexicographically by coordinates.
    const std::vector<Vertex>& vertices() const { return vertices_; }

    // Facets kept although they do not support a face of codimension one.
    const std::vector<std::size_t>& redundant_facets() const { return redundant_; }

    // Facet sets of the maximal cones of the normal fan. These are the vertex
    // incidences, except after inflation, which keeps the fan it started from.
    const std::vector<std::vector<std::size_t>>& cones() const { return cones_; }

    // Average of the vertices; an interior point.
    std::vector<Rational> barycenter() const;

    bool operator==(const LatticePolytope& other) const;

private:
    std::size_t dim_;
    std::vector<Facet> facets_;
    std::string name_;
    std::vector<Vertex> vertices_;
    std::vector<std::size_t> redundant_;
    std::vector<std::vector<std::size_t>> cones_;

    friend LatticePolytope inflate(const LatticePolytope&, const Rational&);
};

LatticePolytope parse_polytope(std::string_view json_text);

std::vector<Vertex> vertices(const LatticePolytope& p);

struct DelzantReport {
    bool delzant = true;
    std::string diagnostic;  // names the first offending vertex
};

DelzantReport is_delzant(const LatticePolytope& p);

// Interior point equidistant (in the lattice sense) from every facet.
struct MonotoneCenter {
    std::vector<Rational> point;
    Rational distance;
};

std::optional<MonotoneCenter> monotone_center(const LatticePolytope& p);
bool is_monotone(const LatticePolytope& p);

// Moves every facet outward by k/2π (given exactly as a rational). Facets that
// end up redundant are kept, see redundant_facets().
LatticePolytope inflate(const LatticePolytope& p, const Rational& k_over_2pi);

// Replaces every normal ν by σν. For unimodular σ this is the polytope σ^{-T}(P).
LatticePolytope transform(const LatticePolytope& p, const IntMatrix& sigma);

// φ_i = −(1/2π) log|z_i|. Throws InputError on a zero coordinate.
std::vector<double> log_map(std::span<const std::complex<double>> z);

inline constexpr double kDefaultLogTol = 1e-9;

// Membership of Log(z): every ⟨ν,Log z⟩+α > tol (strict) or ≥ −tol.
bool contains_log(const LatticePolytope& p, std::span<const std::complex<double>> z, bool strict = true,
                  double tol = kDefaultLogTol);

// Standard polytopes used by the benchmarks.
LatticePolytope projective_space_polytope(std::size_t n, const Rational& size);
LatticePolytope p1p1_polytope(const Rational& size1, const Rational& size2);
LatticePolytope hirzebruch_polytope(int m, const Rational& a, const Rational& b);

} // namespace lgwb
