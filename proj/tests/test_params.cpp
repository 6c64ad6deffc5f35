#include <doctest.h>

#include <cmath>
#include <random>

#include "ep3sim/errors.hpp"
#include "ep3sim/params.hpp"
#include "ep3sim/spectral.hpp"

using namespace ep3sim;
using params::PseudoHermitianConfig;

namespace {

params::PhysicalParams derive(double eta, double g1, int sign = +1,
                              double kappa_int = 1.0, double split = 0.5) {
    PseudoHermitianConfig cfg;
    cfg.eta = eta;
    cfg.g1 = g1;
    cfg.delta1_sign = sign;
    return params::derive_pseudo_hermitian(cfg, kappa_int, split);
}

}  // namespace

TEST_CASE("derive_pseudo_hermitian: symmetric case, fig3 scenario values") {
    const auto p = derive(1.0, 2.0 / std::sqrt(3.0));
    CHECK(p.kappa1 == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(p.kappa2 == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(p.g2 == doctest::Approx(p.g1).epsilon(1e-14));       // k = 1
    CHECK(p.delta1 == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(p.delta2 == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(p.gamma1 == doctest::Approx(1.0));
    CHECK(p.kappa_g() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("derive_pseudo_hermitian: detunings vanish at g_min") {
    const auto p = derive(1.0, 1.0);  // g_min(1) = 1
    CHECK(p.delta1 == doctest::Approx(0.0));
    CHECK(p.delta2 == doctest::Approx(0.0));
}

TEST_CASE("derive_pseudo_hermitian: eta=3 follows the fig4 port rule") {
    const auto p = derive(3.0, params::g_ep3(3.0));
    CHECK(p.kappa1 == doctest::Approx(2.5).epsilon(1e-14));  // 1 + 0.5 eta
    CHECK(p.kappa2 == doctest::Approx(2.5).epsilon(1e-14));
    const double k = std::pow(7.0 / 15.0, 1.5);
    CHECK(p.g2 / p.g1 == doctest::Approx(k).epsilon(1e-13));
    CHECK(k == doctest::Approx(0.318794).epsilon(1e-5));
}

TEST_CASE("derive_pseudo_hermitian: rejections") {
    CHECK_THROWS_AS(derive(1.0, 0.9), ValidationError);         // below g_min
    CHECK_THROWS_AS(derive(1.0, 1.2, +1, -1.0), ValidationError);
    CHECK_THROWS_AS(derive(1.0, 1.2, +1, 1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(derive(1.0, 1.2, +1, 1.0, 1.0), ValidationError);
    CHECK_THROWS_AS(derive(-1.0, 1.2), ValidationError);
    CHECK_THROWS_AS(derive(1.0, 1.2, 3), ValidationError);
}

TEST_CASE("g_ep3: paper value and closed-form evaluations") {
    CHECK(params::g_ep3(1.0) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(params::g_ep3(1.0) == doctest::Approx(1.154700).epsilon(1e-6));
    CHECK(params::g_ep3(2.0) == doctest::Approx(4.0 * std::sqrt(8.0) / 5.0).epsilon(1e-15));
    CHECK(params::g_ep3(2.0) == doctest::Approx(2.262742).epsilon(1e-6));
    CHECK(params::g_ep3(1e-9) < 1e-8);  // -> 0 as eta -> 0+
    CHECK_THROWS_AS(params::g_ep3(0.0), ValidationError);
}

TEST_CASE("omega_ep3: symmetric zero, asymmetric shift, additive delta_cp") {
    CHECK(params::omega_ep3(1.0, 0.0) == 0.0);
    CHECK(params::omega_ep3(2.0, 0.0)
          == doctest::Approx(-std::sqrt(3.0) / 10.0).epsilon(1e-15));
    CHECK(params::omega_ep3(2.0, 5.0)
          == doctest::Approx(5.0 - 0.173205).epsilon(1e-6));
}

TEST_CASE("ep3_eigenvector: eta=1 closed form") {
    const auto v = params::ep3_eigenvector(1.0);
    const double s3 = std::sqrt(3.0);
    CHECK(std::abs(v[0] - Complex{1.0 / s3, 0.0}) < 1e-14);
    CHECK(std::abs(v[1] - Complex{-0.5, -s3 / 2.0} / s3) < 1e-14);
    CHECK(std::abs(v[2] - Complex{0.5, -s3 / 2.0} / s3) < 1e-14);
}

TEST_CASE("ep3_eigenvector: normalized and an actual eigenvector of H_eff") {
    for (const double eta : {0.5, 1.0, 2.0, 3.0}) {
        CAPTURE(eta);
        const auto v = params::ep3_eigenvector(eta);
        double norm2 = 0.0;
        for (const auto& c : v) norm2 += std::norm(c);
        CHECK(std::abs(norm2 - 1.0) < 1e-12);

        const auto p = derive(eta, params::g_ep3(eta));
        const auto h = spectral::build_heff(p, 0.0);
        const double w = params::omega_ep3(eta, 0.0);
        double residual = 0.0;
        for (int r = 0; r < 3; ++r) {
            Complex acc = -w * v[r];
            for (int c = 0; c < 3; ++c) acc += h.entry(r, c) * v[c];
            residual = std::max(residual, std::abs(acc));
        }
        CHECK(residual < 1e-9);
    }
}

TEST_CASE("manifold round trip: all four constraint lines hold") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double eta = 0.1 + 4.9 * u01(rng);
        const double g1 = params::g_min(eta) * (1.0 + 3.0 * u01(rng));
        const int sign = u01(rng) < 0.5 ? +1 : -1;
        const double kint = 0.2 + 2.0 * u01(rng);
        const double split = 0.05 + 0.9 * u01(rng);
        const auto p = derive(eta, g1, sign, kint, split);
        CAPTURE(eta);
        CAPTURE(g1);

        CHECK(p.kappa_g() == doctest::Approx((1.0 + eta) * p.gamma2).epsilon(1e-12));
        CHECK(p.delta2 == doctest::Approx(-eta * p.delta1).epsilon(1e-12));
        const double k = p.g2 / p.g1;
        const double d1sq = (1.0 + eta * k * k) / ((1.0 + eta) * eta) * p.g1 * p.g1
                            - p.gamma2 * p.gamma2;
        CHECK(p.delta1 * p.delta1 == doctest::Approx(d1sq).epsilon(1e-12));
        CHECK(k == doctest::Approx(std::pow((1.0 + 2.0 * eta) / (2.0 * eta + eta * eta), 1.5))
                       .epsilon(1e-12));
        CHECK(p.kappa_c() == doctest::Approx(p.kappa_int + p.kappa1 + p.kappa2));
        CHECK(params::is_pseudo_hermitian(p));
    }
}

TEST_CASE("g_ep3 stays inside the allowed coupling region") {
    for (double eta = 0.1; eta <= 10.0; eta *= 1.18) {
        CAPTURE(eta);
        CHECK(params::g_ep3(eta) >= params::g_min(eta));
    }
}

TEST_CASE("delta1_sign flip mirrors the detunings and nothing else") {
    const auto plus = derive(1.7, 2.4, +1);
    const auto minus = derive(1.7, 2.4, -1);
    CHECK(minus.delta1 == doctest::Approx(-plus.delta1).epsilon(1e-15));
    CHECK(minus.delta2 == doctest::Approx(-plus.delta2).epsilon(1e-15));
    CHECK(minus.g1 == plus.g1);
    CHECK(minus.g2 == plus.g2);
    CHECK(minus.kappa1 == plus.kappa1);
    CHECK(minus.kappa2 == plus.kappa2);
    CHECK(minus.gamma1 == plus.gamma1);
}

TEST_CASE("PhysicalParams validation") {
    params::PhysicalParams p = derive(1.0, 1.3);
    CHECK_NOTHROW(p.validate());
    p.delta_k = -0.1;
    CHECK_THROWS_AS(p.validate(), ValidationError);
    p = derive(1.0, 1.3);
    p.gamma2 = 0.0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
}
