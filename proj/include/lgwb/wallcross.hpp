#pragma once

// Chart gluings across the wall between the Clifford chart (z1, z2) and the
// Chekanov chart (w, u) of CP² and CP¹×CP¹.
//
// Maps assign each Chekanov variable a function of the Clifford variables:
//   classical (λ > 0):  w = z1/z2, u = z2
//   classical (λ < 0):  w = z1/z2, u = z1
//   corrected:          w = z1/z2, u = z1 + z2  (= classical·(1+w), or ·(1+1/w))

#include "lgwb/critical.hpp"
#include "lgwb/qcoh.hpp"
#include "lgwb/substitution.hpp"
#include "lgwb/superpotential.hpp"

namespace lgwb {

// z_i ↦ z_i · h^{pairing_i}. h must have constant term 1.
SubstitutionMap wall_map(const LaurentPoly& h, const std::vector<int>& pairing);

SubstitutionMap classical_pos_map(std::size_t nparams = 0);
SubstitutionMap classical_neg_map(std::size_t nparams = 0);
SubstitutionMap quantum_map(std::size_t nparams = 0);
// Inverse of quantum_map: z1 = uw/(1+w), z2 = u/(1+w).
SubstitutionMap quantum_inverse_map(std::size_t nparams = 0);

struct GluingVerdict {
    bool identity_holds = false;
    LaurentRational transformed;
    LaurentRational expected;
};

// Substitutes m into W_src (its variables become functions of W_dst's) and
// compares with W_dst exactly.
GluingVerdict verify_chart_identity(const Superpotential& src, const Superpotential& dst, const SubstitutionMap& m);

// Exponent-lattice matrix of going around the nodal fiber: leave the
// Chekanov chart through map_pos and come back through map_neg, i.e.
// M_neg · M_pos⁻¹ in row-exponent convention. For the classical gluings this
// is (w, u) ↦ (w, uw).
IntMatrix monodromy(const SubstitutionMap& map_pos, const SubstitutionMap& map_neg);

struct LostValues {
    MultisetMatch match;                      // a = source values, b = target values
    std::vector<Complex> source_values;
    std::vector<Complex> target_values;
    // For each unmatched target-side point: whether the map sends it outside (ℂ*)ⁿ.
    std::vector<bool> target_image_degenerate;
};

inline constexpr double kLostValueTol = 1e-8;
inline constexpr double kZeroSnap = 1e-10;

// Critical values of both charts; values with |v| < 1e-10·scale are snapped to 0.
LostValues lost_values(const Superpotential& src, const Superpotential& dst, const SubstitutionMap& m,
                       const SolverConfig& cfg);

} // namespace lgwb
