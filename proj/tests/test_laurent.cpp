#include "lgwb/laurent.hpp"
#include "lgwb/substitution.hpp"

#include <doctest.h>

using namespace lgwb;

namespace {

// Ring Q[q][z1^±, z2^±]
const Ring kZ{{"z1", "z2"}, {"q"}};
const Ring kWU{{"w", "u"}, {"q"}};

LaurentPoly z(std::size_t i, int power = 1) { return LaurentPoly::variable(i, 2, 1, power); }
LaurentPoly one() { return LaurentPoly::constant(1, 2, 1); }
LaurentPoly q() { return LaurentPoly::constant(ParamCoeff::parameter(0), 2, 1); }

} // namespace

TEST_SUITE("laurent") {

TEST_CASE("arithmetic examples")
{
    CHECK((z(0) + z(1)) * (z(0) - z(1)) == z(0).pow(2) - z(1).pow(2));
    CHECK(to_string((z(0) + z(1)) * (z(0) - z(1)), kZ) == "-z2^2 + z1^2");
    CHECK((q() * z(0, -1)).pow(3) == LaurentPoly::monomial({-3, 0}, ParamCoeff::parameter(0, 3), 1));
    CHECK(to_string((q() * z(0, -1)).pow(3), kZ) == "q^3*z1^-3");
    CHECK(to_string((one() + z(0)).pow(2), kWU) == "1 + 2*w + w^2");
    CHECK((one() + z(0)).pow(0) == one());
    CHECK((z(0) - z(0)).is_zero());
}

TEST_CASE("canonical text")
{
    const auto p = LaurentPoly::monomial({-1, 3}, ParamCoeff::parameter(0, 2, Rational(3, 2)), 1);
    CHECK(to_string(p, kZ) == "3/2*q^2*z1^-1*z2^3");
    CHECK(to_string(z(0) + z(1) + q() * z(0, -1) * z(1, -1), kZ) == "q*z1^-1*z2^-1 + z2 + z1");
    CHECK(to_string(LaurentPoly(2, 1), kZ) == "0");
    CHECK(to_string(-(z(0).scaled(2)) + one(), kZ) == "1 - 2*z1");
    const ParamCoeff mixed = ParamCoeff(1) + ParamCoeff::parameter(0);
    CHECK(to_string(LaurentPoly::monomial({1, 0}, mixed, 1), kZ) == "(1 + q)*z1");
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS((one() + z(0)).pow(-1), InputError);
    CHECK_THROWS_AS(z(0) + LaurentPoly::variable(0, 3, 1), InputError);
    CHECK_THROWS_AS(z(0) + LaurentPoly::variable(0, 2, 0), InputError);
    CHECK_THROWS_AS(LaurentRational(z(0), LaurentPoly(2, 1)), NumericError);
    CHECK_THROWS_AS(LaurentRational(z(0)) / LaurentRational(LaurentPoly(2, 1)), NumericError);
    const std::vector<Complex> at{0.0, 1.0};
    const std::vector<Complex> qv{0.5};
    CHECK_THROWS_AS(eval(z(0), std::span<const Complex>(at), qv), InputError);
    const std::vector<Complex> pt{1.0, 1.0};
    CHECK_THROWS_AS(eval(q(), std::span<const Complex>(pt)), InputError);
    CHECK_THROWS_AS(eval(q(), kZ, pt, {}), InputError);
    const std::vector<Complex> w{-1.0, 1.0};
    CHECK_THROWS_AS(eval(LaurentRational(one(), one() + z(0)), w, qv), NumericError);
    CHECK_THROWS_AS(log_derivative(z(0), 2), InputError);
}

TEST_CASE("log derivative")
{
    const auto w = z(0) + z(1) + q() * z(0, -1) * z(1, -1);
    CHECK(log_derivative(w, 0) == z(0) - q() * z(0, -1) * z(1, -1));
    CHECK(log_derivative(q(), 1).is_zero());
    CHECK(log_derivative(z(0).pow(3), 0) == z(0).pow(3).scaled(3));
}

TEST_CASE("evaluation")
{
    const auto w = z(0) + z(1) + q() * z(0, -1) * z(1, -1);
    const std::vector<Complex> pt{0.1, 0.1};
    CHECK(std::abs(eval(w, kZ, pt, {{"q", 1e-3}}) - 0.3) < 1e-15);
    const std::vector<Complex> qv{1e-3};
    CHECK(std::abs(eval(w, std::span<const Complex>(pt), qv) - 0.3) < 1e-15);
    const std::vector<Complex> wm{-1.0, 1.0};
    CHECK(eval(one() + z(0), std::span<const Complex>(wm), qv) == 0.0);
    const std::vector<Complex> p24{2.0, 4.0};
    CHECK(eval(LaurentRational(z(0), z(1)), p24, qv) == 0.5);
    const auto num = to_numeric(w, qv);
    CHECK(std::abs(eval(num, std::span<const Complex>(pt)) - 0.3) < 1e-15);
}

TEST_CASE("rational normalization and equality")
{
    const LaurentRational a(z(0).pow(2) - z(1).pow(2), z(0) - z(1));
    CHECK(rational_eq(a, LaurentRational(z(0) + z(1))));
    // exact division leaves a polynomial
    CHECK(a.is_polynomial());
    CHECK(a.num() == z(0) + z(1));
    CHECK_FALSE(rational_eq(LaurentRational(z(0), z(1)), LaurentRational(z(1), z(0))));
    // monomial content and leading scalar come out of the denominator
    const LaurentRational b(z(0), z(1).scaled(3));
    CHECK(b.is_polynomial());
    CHECK(b.num() == LaurentPoly::monomial({1, -1}, Rational(1, 3), 1));
    const LaurentRational c(z(0), (one() + z(0)) * z(1, 2).scaled(2));
    CHECK(c.den() == one() + z(0));
    CHECK(to_string(c, kWU) == "(1/2*w*u^-2)/(1 + w)");
    CHECK(rational_eq(c * LaurentRational(one() + z(0)), LaurentRational((z(0) * z(1, -2)).scaled(Rational(1, 2)))));
    CHECK(rational_eq(LaurentRational(one(), one() + z(0)).pow(-2), LaurentRational((one() + z(0)).pow(2))));
}

TEST_CASE("exact quotient")
{
    const auto d = one() + z(0) + q() * z(1, -1);
    const auto p = (z(0) - z(1, 3)) * d;
    const auto qt = exact_quotient(p, d);
    REQUIRE(qt);
    CHECK(*qt == z(0) - z(1, 3));
    CHECK_FALSE(exact_quotient(p + one(), d));
    CHECK_FALSE(exact_quotient(one(), one() + z(0)));
}

TEST_CASE("substitution examples")
{
    // Chekanov chart of CP² pulled back along u = z1 + z2, w = z1/z2
    LaurentPoly chek = z(1) + q() * (one() + z(0)).pow(2) * z(1, -2) * z(0, -1);
    const SubstitutionMap m({LaurentRational(z(0), z(1)), LaurentRational(z(0) + z(1))}, 2, 1);
    const auto r = substitute(chek, m);
    CHECK(r.is_polynomial());
    CHECK(r.num() == z(0) + z(1) + q() * z(0, -1) * z(1, -1));

    CHECK(substitute(z(0), SubstitutionMap::identity(2, 1)).num() == z(0));
    const SubstitutionMap only_w({LaurentRational(z(0), z(1)), LaurentRational(z(1))}, 2, 1);
    const auto w = substitute(z(0), only_w);
    CHECK(w.is_polynomial());
    CHECK(w.num() == z(0) * z(1, -1));
    CHECK(only_w.monomial_part() == std::optional<IntMatrix>(IntMatrix{{1, -1}, {0, 1}}));
    CHECK_FALSE(m.monomial_part());
    CHECK(to_string(m, kWU, kZ) == "{w -> z1*z2^-1, u -> z2 + z1}");
}

TEST_CASE("substitution into a rational function and composition")
{
    const SubstitutionMap m({LaurentRational(z(0) + one()), LaurentRational(z(1), z(0))}, 2, 1);
    const SubstitutionMap n({LaurentRational(z(1)), LaurentRational(z(0) * q())}, 2, 1);
    const LaurentRational f(z(0) * z(1) + q(), one() + z(1));
    CHECK(rational_eq(substitute(substitute(f, m), n), substitute(f, compose(m, n))));
    const std::vector<Complex> pt{Complex(0.3, 0.2), Complex(-1.1, 0.4)};
    const std::vector<Complex> qv{0.7};
    const auto img = apply(m, pt, qv);
    CHECK(std::abs(eval(substitute(f, m), pt, qv) - eval(f, img, qv)) < 1e-13);
}

}
