#include "support.hpp"

#include "lgwb/roots.hpp"

#include <Eigen/Eigenvalues>
#include <doctest.h>

#include <random>

using namespace lgwb;

namespace {

std::vector<Complex> eigen_oracle(const Eigen::MatrixXcd& m)
{
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
    return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

} // namespace

TEST_SUITE("qcoh") {

TEST_CASE("CP^n matrices")
{
    const double lambda = 3 * std::log(10.0);
    const auto m = c1_matrix_cpn(2, lambda);
    CHECK(m.basis_labels == std::vector<std::string>{"1", "H", "H^2"});
    CHECK(m.space_label == "cp2");
    const auto cp = char_poly(m);
    REQUIRE(cp.size() == 4);
    CHECK(std::abs(cp[0] + 27e-3) < 1e-15);
    CHECK(std::abs(cp[1]) < 1e-15);
    CHECK(std::abs(cp[2]) < 1e-15);
    CHECK(cp[3] == Complex(1.0));
    CHECK(test::brute_match(eigenvalues(m), test::roots_of_unity_times(0.3, 3)) < 1e-12);
    CHECK(test::brute_match(eigenvalues(m), eigen_oracle(m.entries)) < 1e-12);

    const auto m1 = c1_matrix_cpn(1, 2.0);
    CHECK(test::brute_match(eigenvalues(m1), {2 * std::exp(-1.0), -2 * std::exp(-1.0)}) < 1e-14);

    // Λ → Λ + 3k scales the spectrum by e^{-k}
    const auto shifted = eigenvalues(c1_matrix_cpn(2, lambda + 3 * 0.7));
    std::vector<Complex> scaled;
    for (auto e : eigenvalues(m)) scaled.push_back(e * std::exp(-0.7));
    CHECK(test::brute_match(shifted, scaled) < 1e-13);

    for (int n = 1; n <= 4; ++n) {
        const auto mn = c1_matrix_cpn(n, 1.3);
        CHECK(test::brute_match(eigenvalues(mn), eigen_oracle(mn.entries)) < 1e-10);
    }
    CHECK_THROWS_AS(c1_matrix_cpn(0, 1.0), InputError);
    CHECK_THROWS_AS(c1_matrix_cpn(2, 0.0), InputError);
}

TEST_CASE("CP1xCP1 matrices")
{
    const double l = 2 * std::log(10.0);
    const auto m = c1_matrix_p1p1(l, l);
    CHECK(m.entries.trace() == Complex(0.0));
    CHECK(test::brute_match(eigenvalues(m), {0.4, 0.0, 0.0, -0.4}) < 1e-8);
    const auto d = c1_matrix_p1p1(2.0, 3.0);
    const double a = 2 * std::exp(-1.0), b = 2 * std::exp(-1.5);
    const std::vector<Complex> expect{a + b, a - b, -a + b, -a - b};
    CHECK(test::brute_match(eigenvalues(d), expect) < 1e-13);
    CHECK(test::brute_match(eigenvalues(d), eigen_oracle(d.entries)) < 1e-12);
    CHECK(std::abs(d.entries.trace()) < 1e-15);
    CHECK_THROWS_AS(c1_matrix_p1p1(-1.0, 1.0), InputError);
}

TEST_CASE("char_poly")
{
    const auto id = char_poly(Eigen::MatrixXcd::Identity(2, 2));
    CHECK(id == std::vector<Complex>{1.0, -2.0, 1.0});
    const auto z = char_poly(Eigen::MatrixXcd::Zero(3, 3));
    CHECK(z == std::vector<Complex>{0.0, 0.0, 0.0, 1.0});
    CHECK_THROWS_AS(char_poly(Eigen::MatrixXcd::Zero(2, 3)), InputError);

    // companion matrix round trip
    std::mt19937_64 rng(9);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + trial % 5;
        std::vector<Complex> c;
        for (int k = 0; k < n; ++k) c.emplace_back(g(rng), g(rng));
        c.emplace_back(1.0);
        Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
        for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
        for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)];
        const auto back = char_poly(comp);
        for (std::size_t k = 0; k < c.size(); ++k) CHECK(std::abs(back[k] - c[k]) < 1e-12 * (1 + std::abs(c[k])));
    }
}

TEST_CASE("spectrum is invariant under basis permutation")
{
    auto m = c1_matrix_p1p1(2.0, 3.5);
    const auto before = eigenvalues(m);
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(4);
    perm.indices() << 2, 0, 3, 1;
    m.entries = perm * m.entries * perm.transpose();
    CHECK(test::brute_match(eigenvalues(m), before) < 1e-13);
}

TEST_CASE("multiset matching")
{
    const auto cube = test::roots_of_unity_times(0.3, 3);
    const std::vector<Complex> permuted{cube[2], cube[0], cube[1]};
    const auto m = match_multisets(cube, permuted, 1e-8);
    CHECK(m.perfect());
    CHECK(m.max_distance == 0.0);

    const auto lost = match_multisets({0.4, 0.0, 0.0, -0.4}, {0.4, -0.4}, 1e-8);
    CHECK(lost.pairs.size() == 2);
    CHECK(lost.unmatched_a == std::vector<Complex>{0.0, 0.0});
    CHECK(lost.unmatched_b.empty());

    std::vector<Complex> nudged;
    for (auto c : cube) nudged.push_back(c + Complex(3e-10, -2e-10));
    const auto near = match_multisets(cube, nudged, 1e-8);
    CHECK(near.perfect());
    CHECK(near.max_distance < 1e-9);

    // greedy alone pairs 1 with 0.6 and leaves 0 against 2
    const auto swap = match_multisets({0.0, 1.0}, {0.6, 2.0}, 1.1);
    CHECK(swap.perfect());
    CHECK(swap.max_distance == doctest::Approx(1.0));

    std::mt19937_64 rng(21);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> a, b;
        for (int k = 0; k < 5; ++k) a.emplace_back(g(rng), g(rng));
        b = a;
        std::shuffle(b.begin(), b.end(), rng);
        for (auto& x : b) x += Complex(1e-11 * g(rng), 1e-11 * g(rng));
        const auto r = match_multisets(a, b, 1e-8);
        CHECK(r.perfect());
        CHECK(r.max_distance == doctest::Approx(test::brute_match(a, b)).epsilon(1e-6));
    }
}

TEST_CASE("critical values are eigenvalues on a grid of areas")
{
    const Rational sizes[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1), Rational(3, 2)};
    for (const auto& s : sizes) {
        const double lambda = 2 * M_PI * to_double(s);
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(n);
            CAPTURE(lambda);
            const auto w = toric_superpotential(projective_space_polytope(static_cast<std::size_t>(n), s), Mode::numeric);
            const auto values = critical_values(solve_critical(w, SolverConfig{}).points);
            const auto m = match_multisets(values, eigenvalues(c1_matrix_cpn(n, lambda)), 1e-8);
            CHECK(m.perfect());
            CHECK(m.max_distance <= 1e-8);
        }
        const Rational other = s + Rational(1, 3);
        const auto w = toric_superpotential(p1p1_polytope(s, other), Mode::numeric);
        const auto values = critical_values(solve_critical(w, SolverConfig{}).points);
        const auto m =
            match_multisets(values, eigenvalues(c1_matrix_p1p1(lambda, 2 * M_PI * to_double(other))), 1e-8);
        CHECK(m.perfect());
        CHECK(m.max_distance <= 1e-8);
    }
}

}
