#include "lgwb/substitution.hpp"

#include <algorithm>

namespace lgwb {

namespace {

std::optional<Exponent> bare_monomial(const LaurentRational& r)
{
    if (!r.is_polynomial() || !r.num().is_monomial()) return std::nullopt;
    const auto& [e, c] = *r.num().terms().begin();
    if (!(c == ParamCoeff(1))) return std::nullopt;
    return e;
}

} // namespace

SubstitutionMap::SubstitutionMap(std::vector<LaurentRational> assignments, std::size_t source_nvars,
                                 std::size_t nparams)
    : assignments_(std::move(assignments)), source_nvars_(source_nvars), nparams_(nparams)
{
    for (const auto& a : assignments_) {
        if (a.nvars() != source_nvars_) throw InputError("assignment lives in the wrong ring");
        if (a.nparams() != nparams_) throw InputError("assignment has a mismatched parameter list");
        if (a.is_zero()) throw InputError("substitution assigns zero to a variable");
    }
    IntMatrix m;
    for (const auto& a : assignments_) {
        auto e = bare_monomial(a);
        if (!e) return;
        m.emplace_back(e->begin(), e->end());
    }
    monomial_part_ = std::move(m);
}

SubstitutionMap SubstitutionMap::identity(std::size_t nvars, std::size_t nparams)
{
    return monomial(identity_matrix(nvars), nparams);
}

SubstitutionMap SubstitutionMap::monomial(const IntMatrix& exponents, std::size_t nparams)
{
    if (exponents.empty()) throw InputError("empty monomial map");
    const std::size_t source = exponents.front().size();
    std::vector<LaurentRational> a;
    for (const auto& row : exponents) {
        if (row.size() != source) throw InputError("ragged monomial map");
        Exponent e(row.begin(), row.end());
        a.emplace_back(LaurentPoly::monomial(e, ParamCoeff(1), nparams));
    }
    return SubstitutionMap(std::move(a), source, nparams);
}

LaurentRational substitute(const LaurentPoly& p, const SubstitutionMap& m)
{
    if (p.nvars() != m.target_nvars()) throw InputError("substitution does not cover every variable");
    if (p.nparams() != m.nparams()) throw InputError("substitution has a mismatched parameter list");
    const std::size_t n = p.nvars();
    const std::size_t target = m.source_nvars();
    const std::size_t np = m.nparams();
    if (p.is_zero()) return LaurentRational(LaurentPoly(target, np));

    // x_i^a = N_i^a / D_i^a. Multiplying every term by N_i^{L_i} D_i^{H_i}
    // (L_i = max(0, -min a_i), H_i = max(0, max a_i)) leaves only nonnegative powers.
    std::vector<int> lo(n, 0), hi(n, 0);
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], e[i]);
            hi[i] = std::max(hi[i], e[i]);
        }

    std::vector<std::vector<LaurentPoly>> npow(n), dpow(n);
    const LaurentPoly one = LaurentPoly::constant(ParamCoeff(1), target, np);
    for (std::size_t i = 0; i < n; ++i) {
        const int top = hi[i] - lo[i];
        npow[i].push_back(one);
        dpow[i].push_back(one);
        for (int k = 1; k <= top; ++k) {
            npow[i].push_back(npow[i].back() * m[i].num());
            dpow[i].push_back(dpow[i].back() * m[i].den());
        }
    }

    LaurentPoly num(target, np);
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly term = LaurentPoly::constant(c, target, np);
        for (std::size_t i = 0; i < n; ++i) {
            term *= npow[i][e[i] - lo[i]];
            term *= dpow[i][hi[i] - e[i]];
        }
        num += term;
    }
    LaurentPoly den = one;
    for (std::size_t i = 0; i < n; ++i) {
        den *= npow[i][-lo[i]];
        den *= dpow[i][hi[i]];
    }
    if (den.is_zero()) throw NumericError("substitution produces a zero denominator");
    return LaurentRational(std::move(num), std::move(den));
}

LaurentRational substitute(const LaurentRational& r, const SubstitutionMap& m)
{
    return substitute(r.num(), m) / substitute(r.den(), m);
}

SubstitutionMap compose(const SubstitutionMap& a, const SubstitutionMap& b)
{
    if (a.source_nvars() != b.target_nvars()) throw InputError("maps cannot be composed: ring mismatch");
    std::vector<LaurentRational> out;
    for (const auto& x : a.assignments()) out.push_back(substitute(x, b));
    return SubstitutionMap(std::move(out), b.source_nvars(), b.nparams());
}

std::vector<Complex> apply(const SubstitutionMap& m, std::span<const Complex> z, std::span<const Complex> params)
{
    std::vector<Complex> out;
    for (const auto& a : m.assignments()) out.push_back(eval(a, z, params));
    return out;
}

std::string to_string(const SubstitutionMap& m, const Ring& target, const Ring& source)
{
    std::string s = "{";
    for (std::size_t i = 0; i < m.target_nvars(); ++i) {
        if (i) s += ", ";
        s += (i < target.variables.size() ? target.variables[i] : "x" + std::to_string(i + 1)) + " -> " +
             to_string(m[i], source);
    }
    return s + "}";
}

} // namespace lgwb
