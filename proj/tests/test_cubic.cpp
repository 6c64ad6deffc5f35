#include <doctest.h>

#include <cmath>
#include <random>

#include "ep3sim/cubic.hpp"
#include "support/oracles.hpp"

using namespace ep3sim;

TEST_CASE("complex cubic: known factorizations") {
    // (z - 1)(z - 2i)(z + 3) = z^3 + (2 - 2i) z^2 + (-3 - 4i) z + 6i
    const auto roots = cubic::solve_monic_complex({2.0, -2.0}, {-3.0, -4.0}, {0.0, 6.0});
    const std::array<Complex, 3> expected = {Complex{1, 0}, Complex{0, 2}, Complex{-3, 0}};
    CHECK(testing::root_set_distance(roots, expected) < 1e-13);
}

TEST_CASE("complex cubic: exact triple root") {
    // (z - (1+i))^3
    const Complex r{1.0, 1.0};
    const Complex a = -3.0 * r;
    const Complex b = 3.0 * r * r;
    const Complex c = -r * r * r;
    const auto roots = cubic::solve_monic_complex(a, b, c);
    for (const auto& z : roots) CHECK(std::abs(z - r) < 1e-5);
}

TEST_CASE("complex cubic: agrees with Durand-Kerner on random coefficients") {
    std::mt19937 rng(20240711);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 2000; ++i) {
        const Complex a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
        const auto closed = cubic::solve_monic_complex(a, b, c);
        const auto oracle = testing::durand_kerner_cubic(a, b, c);
        CHECK(testing::root_set_distance(closed, oracle) < 1e-9);
    }
}

TEST_CASE("real cubic: three real roots, sorted with multiplicity") {
    // (x - 1)(x - 2)(x - 3)
    auto r = cubic::solve_real(1.0, -6.0, 11.0, -6.0);
    REQUIRE(r.roots.size() == 3);
    CHECK(r.discriminant > 0.0);
    CHECK(r.roots[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.roots[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.roots[2] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("real cubic: one real root when a conjugate pair exists") {
    // (x - 2)(x^2 + 1)
    auto r = cubic::solve_real(1.0, -2.0, 1.0, -2.0);
    REQUIRE(r.roots.size() == 1);
    CHECK(r.discriminant < 0.0);
    CHECK(r.roots[0] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("real cubic: degenerate leading coefficients") {
    auto quad = cubic::solve_real(0.0, 1.0, -3.0, 2.0);  // (x-1)(x-2)
    REQUIRE(quad.degree == 2);
    REQUIRE(quad.roots.size() == 2);
    CHECK(quad.roots[0] == doctest::Approx(1.0));
    CHECK(quad.roots[1] == doctest::Approx(2.0));

    auto lin = cubic::solve_real(0.0, 0.0, 2.0, -5.0);
    REQUIRE(lin.degree == 1);
    REQUIRE(lin.roots.size() == 1);
    CHECK(lin.roots[0] == doctest::Approx(2.5));

    auto none = cubic::solve_real(0.0, 1.0, 0.0, 1.0);  // x^2 + 1
    CHECK(none.roots.empty());
}

TEST_CASE("real cubic: root count parity is 1 or 3 on random cubics") {
    std::mt19937 rng(987);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int i = 0; i < 5000; ++i) {
        double c3 = u(rng);
        if (std::abs(c3) < 1e-3) c3 = 1.0;
        const auto r = cubic::solve_real(c3, u(rng), u(rng), u(rng));
        const auto n = r.roots.size();
        CHECK((n == 1 || n == 3));
    }
}

TEST_CASE("real cubic: residuals of reported roots are small") {
    std::mt19937 rng(555);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int i = 0; i < 2000; ++i) {
        const double c3 = (std::abs(u(rng)) + 0.1), c2 = u(rng), c1 = u(rng), c0 = u(rng);
        const auto r = cubic::solve_real(c3, c2, c1, c0);
        for (const double x : r.roots) {
            const double f = ((c3 * x + c2) * x + c1) * x + c0;
            const double scale = std::max({1.0, std::abs(c3 * x * x * x),
                                           std::abs(c2 * x * x), std::abs(c1 * x)});
            CHECK(std::abs(f) / scale < 1e-10);
        }
    }
}
