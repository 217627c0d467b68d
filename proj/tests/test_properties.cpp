#include "generators.hpp"
#include "support.hpp"

#include "lgwb/roots.hpp"
#include "lgwb/substitution.hpp"

#include <doctest.h>

using namespace lgwb;
using namespace test;

TEST_SUITE("properties") {

TEST_CASE("ring axioms")
{
    Rng rng(1);
    const auto one = LaurentPoly::constant(1, 2, 1);
    const LaurentPoly zero(2, 1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK((a - a).is_zero());
        CHECK((a * zero).is_zero());
    }
}

TEST_CASE("log derivative is a derivation")
{
    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_poly(rng, 4), b = random_poly(rng, 4);
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(log_derivative(a * b, i) == log_derivative(a, i) * b + a * log_derivative(b, i));
            CHECK(log_derivative(a + b, i) == log_derivative(a, i) + log_derivative(b, i));
        }
    }
}

TEST_CASE("substitution commutes with evaluation")
{
    Rng rng(3);
    const std::vector<Complex> params{0.37};  // 1 + c*q^k never vanishes for generated c
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_poly(rng, 4);
        const auto m = random_map(rng);
        const auto z = random_point(rng, 2);
        const auto image = apply(m, z, params);
        if (std::any_of(image.begin(), image.end(), [](Complex x) { return std::abs(x) < 1e-3; })) continue;
        const Complex direct = eval(p, std::span<const Complex>(image), params);
        const Complex via = eval(substitute(p, m), z, params);
        CHECK(std::abs(direct - via) <= 1e-12 * std::max(1.0, magnitude(p, image, params)));
    }
}

TEST_CASE("composition of substitutions")
{
    Rng rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_poly(rng, 3, 1);
        const auto a = random_map(rng), b = random_map(rng);
        CHECK(rational_eq(substitute(p, compose(a, b)), substitute(substitute(p, a), b)));
    }
}

TEST_CASE("polynomial roots reproduce their coefficients")
{
    Rng rng(5);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 50; ++trial) {
        const int deg = 1 + trial % 8;
        std::vector<Complex> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(g(rng), g(rng));
        const auto roots = poly_roots(c);
        REQUIRE(roots.size() == static_cast<std::size_t>(deg));
        const auto rebuilt = poly_from_roots(roots);
        double scale = 0.0;
        for (auto x : c) scale = std::max(scale, std::abs(x / c.back()));
        for (int i = 0; i <= deg; ++i) CHECK(std::abs(rebuilt[i] - c[i] / c.back()) <= 1e-8 * scale);
    }
}

TEST_CASE("critical values are invariant under unimodular changes of basis")
{
    Rng rng(6);
    const SolverConfig cfg;
    for (const char* name : {"cp2.json", "p1p1.json", "f3.json"}) {
        const auto p = test::data_polytope(name);
        const auto base = critical_values(solve_critical(toric_superpotential(p, Mode::numeric), cfg).points);
        for (int trial = 0; trial < 3; ++trial) {
            const auto sigma = random_unimodular(rng);
            const auto moved = critical_values(
                solve_critical(toric_superpotential(transform(p, sigma), Mode::numeric), cfg).points);
            REQUIRE(moved.size() == base.size());
            CHECK(test::brute_match(base, moved) <= 1e-9);

            // the same change applied to the polynomial alone, without a domain
            const auto w = toric_superpotential(p, Mode::numeric).numeric;
            const auto free = critical_values(solve_critical(apply_monomial_map(w, sigma), cfg).points);
            REQUIRE(free.size() == base.size());
            CHECK(test::brute_match(base, free) <= 1e-9);
        }
    }
}

}
