#pragma once

#include "lgwb/laurent.hpp"

#include <optional>

namespace lgwb {

// Assignment of a nonzero rational function (in the source ring) to each
// target variable. When every assignment is a bare monomial z^a with unit
// coefficient the map is a lattice map and monomial_part() holds its
// exponent matrix, row i being the exponent of target variable i.
class SubstitutionMap {
public:
    SubstitutionMap(std::vector<LaurentRational> assignments, std::size_t source_nvars, std::size_t nparams);

    static SubstitutionMap identity(std::size_t nvars, std::size_t nparams = 0);
    static SubstitutionMap monomial(const IntMatrix& exponents, std::size_t nparams = 0);

    std::size_t target_nvars() const { return assignments_.size(); }
    std::size_t source_nvars() const { return source_nvars_; }
    std::size_t nparams() const { return nparams_; }
    const std::vector<LaurentRational>& assignments() const { return assignments_; }
    const LaurentRational& operator[](std::size_t i) const { return assignments_.at(i); }
    const std::optional<IntMatrix>& monomial_part() const { return monomial_part_; }

private:
    std::vector<LaurentRational> assignments_;
    std::size_t source_nvars_;
    std::size_t nparams_;
    std::optional<IntMatrix> monomial_part_;
};

// Exact substitution with a common denominator, normalized.
LaurentRational substitute(const LaurentPoly& p, const SubstitutionMap& m);
LaurentRational substitute(const LaurentRational& r, const SubstitutionMap& m);

// substitute(p, compose(a, b)) == substitute(substitute(p, a), b).
SubstitutionMap compose(const SubstitutionMap& a, const SubstitutionMap& b);

// Numeric image of a source point: the value of every assignment at z.
std::vector<Complex> apply(const SubstitutionMap& m, std::span<const Complex> z, std::span<const Complex> params = {});

std::string to_string(const SubstitutionMap& m, const Ring& target, const Ring& source);

} // namespace lgwb
