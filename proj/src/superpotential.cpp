#include "lgwb/superpotential.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace lgwb {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

std::vector<std::string> z_names(std::size_t n)
{
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("z" + std::to_string(i + 1));
    return v;
}

std::vector<std::string> q_names(std::size_t count)
{
    if (count == 1) return {"q"};
    std::vector<std::string> v;
    for (std::size_t i = 0; i < count; ++i) v.push_back("q" + std::to_string(i + 1));
    return v;
}

std::string fmt(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Finishes a family member: attaches bindings and the numeric polynomial.
Superpotential finish(std::vector<std::string> vars, LaurentPoly exact, std::vector<std::string> names,
                      std::vector<std::pair<std::string, double>> areas, Mode mode, std::string chart)
{
    Superpotential w;
    w.variables = std::move(vars);
    w.chart = std::move(chart);
    for (std::size_t i = 0; i < names.size(); ++i)
        w.parameters.push_back({names[i], "exp(-" + areas[i].first + ")", std::exp(-areas[i].second)});
    w.numeric = to_numeric(exact, w.parameter_values());
    if (mode == Mode::symbolic) w.exact = std::move(exact);
    return w;
}

void require(bool ok, const std::string& msg)
{
    if (!ok) throw InputError(msg);
}

} // namespace

Ring Superpotential::ring() const
{
    Ring r{variables, {}};
    for (const auto& p : parameters) r.parameters.push_back(p.name);
    return r;
}

std::vector<Complex> Superpotential::parameter_values() const
{
    std::vector<Complex> v;
    for (const auto& p : parameters) v.emplace_back(p.value);
    return v;
}

const LaurentPoly& Superpotential::symbolic() const
{
    if (!exact) throw InputError("superpotential was built in numeric mode");
    return *exact;
}

Superpotential toric_superpotential(const LatticePolytope& p, Mode mode, bool allow_singular)
{
    if (auto d = is_delzant(p); !d.delzant && !allow_singular)
        throw InputError("polytope is not Delzant: " + d.diagnostic);

    Superpotential w;
    w.variables = z_names(p.dim());
    w.domain = p;
    w.chart = "toric";

    if (mode == Mode::numeric) {
        w.numeric = NumericPoly(p.dim());
        for (const auto& f : p.facets()) {
            Exponent e(f.normal.begin(), f.normal.end());
            w.numeric.add_term(e, Complex(std::exp(-kTwoPi * to_double(f.offset))));
        }
        return w;
    }

    std::vector<Rational> distinct;
    for (const auto& f : p.facets())
        if (f.offset != 0 && std::find(distinct.begin(), distinct.end(), f.offset) == distinct.end())
            distinct.push_back(f.offset);
    const auto names = q_names(distinct.size());
    for (std::size_t i = 0; i < distinct.size(); ++i)
        w.parameters.push_back({names[i], "exp(-2*pi*" + to_string(distinct[i]) + ")",
                                std::exp(-kTwoPi * to_double(distinct[i]))});

    LaurentPoly exact(p.dim(), distinct.size());
    for (const auto& f : p.facets()) {
        Exponent e(f.normal.begin(), f.normal.end());
        if (f.offset == 0) {
            exact.add_term(e, ParamCoeff(1));
        } else {
            const auto idx = std::find(distinct.begin(), distinct.end(), f.offset) - distinct.begin();
            exact.add_term(e, ParamCoeff::parameter(static_cast<std::size_t>(idx)));
        }
    }
    w.numeric = to_numeric(exact, w.parameter_values());
    w.exact = std::move(exact);
    return w;
}

Family parse_family(const std::string& name)
{
    if (name == "cp2_clifford") return Family::cp2_clifford;
    if (name == "cp2_chekanov") return Family::cp2_chekanov;
    if (name == "p1p1_clifford") return Family::p1p1_clifford;
    if (name == "p1p1_chekanov") return Family::p1p1_chekanov;
    if (name == "hirzebruch") return Family::hirzebruch;
    throw InputError("unknown family '" + name + "'");
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::cp2_clifford: return "cp2_clifford";
    case Family::cp2_chekanov: return "cp2_chekanov";
    case Family::p1p1_clifford: return "p1p1_clifford";
    case Family::p1p1_chekanov: return "p1p1_chekanov";
    case Family::hirzebruch: return "hirzebruch";
    }
    return "";
}

Superpotential family(Family f, const FamilyParams& params, Mode mode)
{
    using P = ParamCoeff;
    switch (f) {
    case Family::cp2_clifford:
    case Family::cp2_chekanov: {
        require(params.lambda > 0, "lambda must be positive");
        const std::vector<std::pair<std::string, double>> areas{{fmt(params.lambda), params.lambda}};
        const P q = P::parameter(0);
        if (f == Family::cp2_clifford) {
            LaurentPoly w(2, 1);
            w.add_term({1, 0}, 1);
            w.add_term({0, 1}, 1);
            w.add_term({-1, -1}, q);
            auto sp = finish(z_names(2), std::move(w), {"q"}, areas, mode, "clifford");
            sp.domain = family_polytope(f, params);
            return sp;
        }
        // Variables (w, u): u + q(1+w)²/(u²w).
        LaurentPoly w(2, 1);
        w.add_term({0, 1}, 1);
        w.add_term({-1, -2}, q);
        w.add_term({0, -2}, q * P(2));
        w.add_term({1, -2}, q);
        return finish({"w", "u"}, std::move(w), {"q"}, areas, mode, "chekanov");
    }
    case Family::p1p1_clifford:
    case Family::p1p1_chekanov: {
        require(params.lambda1 > 0 && params.lambda2 > 0, "l1 and l2 must be positive");
        const bool shared = params.lambda1 == params.lambda2;
        std::vector<std::pair<std::string, double>> areas{{fmt(params.lambda1), params.lambda1}};
        if (!shared) areas.push_back({fmt(params.lambda2), params.lambda2});
        const std::size_t np = areas.size();
        const P q1 = P::parameter(0);
        const P q2 = P::parameter(shared ? 0 : 1);
        if (f == Family::p1p1_clifford) {
            LaurentPoly w(2, np);
            w.add_term({1, 0}, 1);
            w.add_term({0, 1}, 1);
            w.add_term({-1, 0}, q1);
            w.add_term({0, -1}, q2);
            auto sp = finish(z_names(2), std::move(w), q_names(np), areas, mode, "clifford");
            sp.domain = family_polytope(f, params);
            return sp;
        }
        // Variables (w, u): u + q1(1+w)/(uw) + q2(1+w)/u.
        LaurentPoly w(2, np);
        w.add_term({0, 1}, 1);
        w.add_term({-1, -1}, q1);
        w.add_term({0, -1}, q1);
        w.add_term({0, -1}, q2);
        w.add_term({1, -1}, q2);
        return finish({"w", "u"}, std::move(w), q_names(np), areas, mode, "chekanov");
    }
    case Family::hirzebruch: {
        require(params.m >= 1, "hirzebruch twist m must be a positive integer");
        require(params.b > 0 && params.a > params.m * params.b, "hirzebruch areas need A > m*B > 0");
        // Parameter order follows the facet order of the polytope: e^{-B}, then e^{-A}.
        LaurentPoly w(2, 2);
        w.add_term({1, 0}, 1);
        w.add_term({0, 1}, 1);
        w.add_term({0, -1}, P::parameter(0));
        w.add_term({-1, -params.m}, P::parameter(1));
        auto sp = finish(z_names(2), std::move(w), {"q1", "q2"}, {{fmt(params.b), params.b}, {fmt(params.a), params.a}},
                         mode, "toric");
        sp.domain = family_polytope(f, params);
        return sp;
    }
    }
    throw InputError("unknown family");
}

LatticePolytope family_polytope(Family f, const FamilyParams& params)
{
    auto r = [](double area) { return rational_from_double(area / kTwoPi); };
    switch (f) {
    case Family::cp2_clifford: return projective_space_polytope(2, r(params.lambda));
    case Family::p1p1_clifford: return p1p1_polytope(r(params.lambda1), r(params.lambda2));
    case Family::hirzebruch: return hirzebruch_polytope(params.m, r(params.a), r(params.b));
    default: throw InputError(family_name(f) + " has no moment polytope");
    }
}

} // namespace lgwb
