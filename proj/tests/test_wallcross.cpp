#include "support.hpp"

#include "lgwb/wallcross.hpp"

#include <doctest.h>

#include <random>

using namespace lgwb;

namespace {

const Ring kWU{{"w", "u"}, {"q"}};
const Ring kZ{{"z1", "z2"}, {"q"}};

FamilyParams cp2_params()
{
    FamilyParams fp;
    fp.lambda = 3 * std::log(10.0);
    return fp;
}

FamilyParams p1p1_params(double l1, double l2)
{
    FamilyParams fp;
    fp.lambda1 = l1;
    fp.lambda2 = l2;
    return fp;
}

LaurentPoly one_plus_w(std::size_t np = 1)
{
    LaurentPoly h(2, np);
    h.add_term({0, 0}, 1);
    h.add_term({1, 0}, 1);
    return h;
}

bool maps_equal(const SubstitutionMap& a, const SubstitutionMap& b)
{
    if (a.target_nvars() != b.target_nvars()) return false;
    for (std::size_t i = 0; i < a.target_nvars(); ++i)
        if (!rational_eq(a[i], b[i])) return false;
    return true;
}

IntMatrix random_unimodular(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> k(-3, 3);
    IntMatrix a{{1, k(rng)}, {0, 1}};
    IntMatrix b{{1, 0}, {k(rng), 1}};
    return multiply(a, b);
}

} // namespace

TEST_SUITE("wallcross") {

TEST_CASE("wall maps")
{
    const auto m = wall_map(one_plus_w(), {0, 1});
    CHECK(to_string(m, kWU, kWU) == "{w -> w, u -> u + w*u}");
    CHECK(maps_equal(wall_map(LaurentPoly::constant(1, 2, 1), {3, -2}), SubstitutionMap::identity(2, 1)));
    const auto inv = wall_map(one_plus_w(), {0, -1});
    CHECK(to_string(inv[1], kWU) == "(u)/(1 + w)");
    CHECK_THROWS_AS(wall_map(LaurentPoly::variable(0, 2, 1), {0, 1}), InputError);
    CHECK_THROWS_AS(wall_map(one_plus_w(), {1}), InputError);

    // classical gluing times the wall factor is the corrected gluing, on both sides
    CHECK(maps_equal(compose(m, classical_pos_map(1)), quantum_map(1)));
    LaurentPoly h_neg(2, 1);
    h_neg.add_term({0, 0}, 1);
    h_neg.add_term({-1, 0}, 1);
    CHECK(maps_equal(compose(wall_map(h_neg, {0, 1}), classical_neg_map(1)), quantum_map(1)));
    CHECK_FALSE(maps_equal(classical_pos_map(1), quantum_map(1)));
}

TEST_CASE("wall maps add in the pairing")
{
    LaurentPoly h = one_plus_w();
    h.add_term({2, -1}, ParamCoeff::parameter(0, 1, Rational(-3, 2)));
    for (const auto& [p1, p2] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
             {{0, 1}, {0, 1}}, {{1, -1}, {0, 2}}, {{-1, 2}, {1, -3}}}) {
        const std::vector<int> sum{p1[0] + p2[0], p1[1] + p2[1]};
        // both factors are evaluated at the original variables, so this is a
        // product of the assignments rather than a composition
        const auto a = wall_map(h, p1), b = wall_map(h, p2), c = wall_map(h, sum);
        for (std::size_t i = 0; i < 2; ++i) {
            const LaurentRational zi(LaurentPoly::variable(i, 2, 1));
            CHECK(rational_eq(a[i] * b[i] / zi, c[i]));
        }
    }
    // a factor in w alone is fixed by maps that do not move w, so there it composes
    const auto g = one_plus_w();
    CHECK(maps_equal(compose(wall_map(g, {0, 2}), wall_map(g, {0, -3})), wall_map(g, {0, -1})));
    CHECK(maps_equal(compose(wall_map(g, {0, 1}), wall_map(g, {0, -1})), SubstitutionMap::identity(2, 1)));
}

TEST_CASE("chart identities hold exactly with the corrected gluing")
{
    const auto chek = family(Family::cp2_chekanov, cp2_params(), Mode::symbolic);
    const auto clif = family(Family::cp2_clifford, cp2_params(), Mode::symbolic);
    const auto v = verify_chart_identity(chek, clif, quantum_map(1));
    CHECK(v.identity_holds);
    CHECK(v.transformed == v.expected);
    CHECK(to_string(v.transformed, kZ) == "q*z1^-1*z2^-1 + z2 + z1");
    const auto back = verify_chart_identity(clif, chek, quantum_inverse_map(1));
    CHECK(back.identity_holds);

    const auto bad = verify_chart_identity(chek, clif, classical_pos_map(1));
    CHECK_FALSE(bad.identity_holds);
    CHECK_FALSE(verify_chart_identity(chek, clif, classical_neg_map(1)).identity_holds);

    for (auto [l1, l2] : {std::pair{2 * std::log(10.0), 2 * std::log(10.0)}, std::pair{2.0, 3.0}}) {
        const auto pc = family(Family::p1p1_chekanov, p1p1_params(l1, l2), Mode::symbolic);
        const auto pl = family(Family::p1p1_clifford, p1p1_params(l1, l2), Mode::symbolic);
        const std::size_t np = pc.parameters.size();
        CHECK(verify_chart_identity(pc, pl, quantum_map(np)).identity_holds);
        CHECK(verify_chart_identity(pl, pc, quantum_inverse_map(np)).identity_holds);
        CHECK_FALSE(verify_chart_identity(pc, pl, classical_pos_map(np)).identity_holds);
    }

    const auto numeric = family(Family::cp2_chekanov, cp2_params(), Mode::numeric);
    CHECK_THROWS_AS(verify_chart_identity(numeric, clif, quantum_map(1)), InputError);
}

TEST_CASE("monodromy")
{
    CHECK(monodromy(classical_pos_map(), classical_neg_map()) == IntMatrix{{1, 0}, {1, 1}});
    CHECK(monodromy(classical_pos_map(), classical_pos_map()) == identity_matrix(2));
    CHECK(monodromy(classical_neg_map(), classical_pos_map()) == IntMatrix{{1, 0}, {-1, 1}});
    CHECK_THROWS_AS(monodromy(quantum_map(), classical_neg_map()), InputError);
    CHECK_THROWS_AS(monodromy(SubstitutionMap::monomial({{2, 0}, {0, 1}}), classical_neg_map()), NumericError);
    CHECK(to_string(monodromy(classical_pos_map(), classical_neg_map())) == "[[1,0],[1,1]]");
}

TEST_CASE("monomial maps compose as matrices")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_unimodular(rng), b = random_unimodular(rng);
        const auto c = compose(SubstitutionMap::monomial(a), SubstitutionMap::monomial(b));
        REQUIRE(c.monomial_part());
        CHECK(*c.monomial_part() == multiply(a, b));
    }
}

TEST_CASE("lost critical values")
{
    const double l = 2 * std::log(10.0);
    const auto pc = family(Family::p1p1_chekanov, p1p1_params(l, l), Mode::symbolic);
    const auto pl = family(Family::p1p1_clifford, p1p1_params(l, l), Mode::symbolic);
    const auto lv = lost_values(pc, pl, quantum_map(1), SolverConfig{});
    CHECK(lv.source_values.size() == 2);
    CHECK(lv.target_values.size() == 4);
    CHECK(lv.match.unmatched_a.empty());
    CHECK(lv.match.unmatched_b == std::vector<Complex>{0.0, 0.0});
    CHECK(lv.target_image_degenerate == std::vector<bool>{true, true});
    CHECK(lv.match.max_distance < 1e-12);

    const auto cc = family(Family::cp2_chekanov, cp2_params(), Mode::symbolic);
    const auto cl = family(Family::cp2_clifford, cp2_params(), Mode::symbolic);
    const auto cv = lost_values(cc, cl, quantum_map(1), SolverConfig{});
    CHECK(cv.match.perfect());
    CHECK(cv.match.pairs.size() == 3);
    // critical values are not affected by the wall, only the points are
    CHECK(cv.match.max_distance < 1e-10);

    const auto same = lost_values(cl, cl, SubstitutionMap::identity(2, 1), SolverConfig{});
    CHECK(same.match.perfect());
    CHECK(same.match.max_distance == 0.0);

    // away from Λ1 = Λ2 the points w = -1 move off the divisor and nothing is lost
    const auto dc = family(Family::p1p1_chekanov, p1p1_params(2.0, 3.0), Mode::symbolic);
    const auto dl = family(Family::p1p1_clifford, p1p1_params(2.0, 3.0), Mode::symbolic);
    const auto dv = lost_values(dc, dl, quantum_map(2), SolverConfig{});
    CHECK(dv.source_values.size() == 4);
    CHECK(dv.match.perfect());
    CHECK(dv.match.max_distance < 1e-10);
}

}
