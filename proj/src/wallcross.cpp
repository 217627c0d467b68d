#include "lgwb/wallcross.hpp"

#include <algorithm>
#include <cmath>

namespace lgwb {

namespace {

// Variables in the Chekanov chart are ordered (w, u); in the Clifford chart (z1, z2).
LaurentRational mono(Exponent e, std::size_t nparams)
{
    return LaurentRational(LaurentPoly::monomial(e, ParamCoeff(1), nparams));
}

Complex snap(Complex v, double scale)
{
    return std::abs(v) < kZeroSnap * scale ? Complex(0.0) : v;
}

} // namespace

SubstitutionMap wall_map(const LaurentPoly& h, const std::vector<int>& pairing)
{
    if (pairing.size() != h.nvars()) throw InputError("one pairing per variable is required");
    const Exponent zero(h.nvars(), 0);
    auto it = h.terms().find(zero);
    if (it == h.terms().end() || !(it->second == ParamCoeff(1)))
        throw InputError("wall-crossing factor must have constant term 1");
    const LaurentRational hr(h);
    std::vector<LaurentRational> a;
    for (std::size_t i = 0; i < h.nvars(); ++i)
        a.push_back(LaurentRational(LaurentPoly::variable(i, h.nvars(), h.nparams())) * hr.pow(pairing[i]));
    return SubstitutionMap(std::move(a), h.nvars(), h.nparams());
}

SubstitutionMap classical_pos_map(std::size_t nparams)
{
    return SubstitutionMap({mono({1, -1}, nparams), mono({0, 1}, nparams)}, 2, nparams);
}

SubstitutionMap classical_neg_map(std::size_t nparams)
{
    return SubstitutionMap({mono({1, -1}, nparams), mono({1, 0}, nparams)}, 2, nparams);
}

SubstitutionMap quantum_map(std::size_t nparams)
{
    LaurentPoly sum(2, nparams);
    sum.add_term({1, 0}, 1);
    sum.add_term({0, 1}, 1);
    return SubstitutionMap({mono({1, -1}, nparams), LaurentRational(sum)}, 2, nparams);
}

SubstitutionMap quantum_inverse_map(std::size_t nparams)
{
    LaurentPoly one_plus_w(2, nparams);
    one_plus_w.add_term({0, 0}, 1);
    one_plus_w.add_term({1, 0}, 1);
    const auto uw = LaurentPoly::monomial({1, 1}, ParamCoeff(1), nparams);
    const auto u = LaurentPoly::monomial({0, 1}, ParamCoeff(1), nparams);
    return SubstitutionMap({LaurentRational(uw, one_plus_w), LaurentRational(u, one_plus_w)}, 2, nparams);
}

GluingVerdict verify_chart_identity(const Superpotential& src, const Superpotential& dst, const SubstitutionMap& m)
{
    const auto& ws = src.symbolic();
    const auto& wd = dst.symbolic();
    if (ws.nparams() != wd.nparams()) throw InputError("charts use different parameter lists");
    GluingVerdict v;
    v.transformed = substitute(ws, m);
    v.expected = LaurentRational(wd);
    v.identity_holds = rational_eq(v.transformed, v.expected);
    return v;
}

IntMatrix monodromy(const SubstitutionMap& map_pos, const SubstitutionMap& map_neg)
{
    const auto& pos = map_pos.monomial_part();
    const auto& neg = map_neg.monomial_part();
    if (!pos || !neg) throw InputError("monodromy needs purely monomial gluing maps");
    auto pos_inv = unimodular_inverse(*pos);
    if (!pos_inv || !unimodular_inverse(*neg)) throw NumericError("gluing map is not unimodular");
    return multiply(*neg, *pos_inv);
}

LostValues lost_values(const Superpotential& src, const Superpotential& dst, const SubstitutionMap& m,
                       const SolverConfig& cfg)
{
    const auto src_set = solve_critical(src, cfg);
    const auto dst_set = solve_critical(dst, cfg);

    LostValues out;
    double scale = 0.0;
    for (const auto& p : src_set.points) scale = std::max(scale, std::abs(p.value));
    for (const auto& p : dst_set.points) scale = std::max(scale, std::abs(p.value));
    if (scale == 0.0) scale = 1.0;
    for (const auto& p : src_set.points) out.source_values.push_back(snap(p.value, scale));
    for (const auto& p : dst_set.points) out.target_values.push_back(snap(p.value, scale));
    out.match = match_multisets(out.source_values, out.target_values, kLostValueTol);

    // Which target points have no preimage: the map sends them to a zero coordinate.
    const auto params = dst.parameter_values();
    std::vector<bool> claimed(dst_set.points.size(), false);
    for (const auto& lost : out.match.unmatched_b) {
        for (std::size_t i = 0; i < dst_set.points.size(); ++i) {
            if (claimed[i] || snap(dst_set.points[i].value, scale) != lost) continue;
            claimed[i] = true;
            bool degenerate = false;
            for (const auto& a : m.assignments()) {
                const double dn = std::abs(eval(a.den(), std::span<const Complex>(dst_set.points[i].z), params));
                const double nm = std::abs(eval(a.num(), std::span<const Complex>(dst_set.points[i].z), params));
                if (dn == 0.0 || nm <= 1e-10 * dn) degenerate = true;
            }
            out.target_image_degenerate.push_back(degenerate);
            break;
        }
    }
    return out;
}

} // namespace lgwb
