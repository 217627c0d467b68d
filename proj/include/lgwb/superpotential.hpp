#pragma once

#include "lgwb/laurent.hpp"
#include "lgwb/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lgwb {

enum class Mode { symbolic, numeric };

struct ParameterBinding {
    std::string name;        // "q", "q1", ...
    std::string definition;  // e.g. "exp(-2*pi*3/2)"
    double value = 0.0;      // numeric value of the weight
};

// A superpotential in one chart. The numeric polynomial is always present;
// the exact one only in symbolic mode.
struct Superpotential {
    std::vector<std::string> variables;
    std::vector<ParameterBinding> parameters;
    std::optional<LaurentPoly> exact;
    NumericPoly numeric;
    std::optional<LatticePolytope> domain;
    std::string chart;

    std::size_t nvars() const { return variables.size(); }
    Ring ring() const;
    std::vector<Complex> parameter_values() const;
    const LaurentPoly& symbolic() const;  // throws InputError in numeric mode
};

// W = Σ_F exp(−2πα(F)) z^{ν(F)}. In symbolic mode each distinct nonzero
// offset gets one parameter and zero offsets give coefficient 1.
// Throws InputError for non-Delzant polytopes unless allow_singular is set.
Superpotential toric_superpotential(const LatticePolytope& p, Mode mode, bool allow_singular = false);

enum class Family { cp2_clifford, cp2_chekanov, p1p1_clifford, p1p1_chekanov, hirzebruch };

struct FamilyParams {
    double lambda = 0.0;   // CP² line area
    double lambda1 = 0.0;  // CP¹×CP¹ factor areas
    double lambda2 = 0.0;
    int m = 0;             // Hirzebruch twist
    double a = 0.0;        // zero-section area A
    double b = 0.0;        // fiber area B
};

Family parse_family(const std::string& name);
std::string family_name(Family f);

// Closed-form potentials. Chekanov charts use variables (w, u) and carry no domain.
Superpotential family(Family f, const FamilyParams& params, Mode mode);

// The polytope of the toric family member, with offsets equal to the exact
// rational value of area/2π as a double.
LatticePolytope family_polytope(Family f, const FamilyParams& params);

} // namespace lgwb
