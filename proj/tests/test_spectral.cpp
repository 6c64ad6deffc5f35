#include <doctest.h>

#include <cmath>
#include <random>

#include "ep3sim/errors.hpp"
#include "ep3sim/spectral.hpp"
#include "support/oracles.hpp"

using namespace ep3sim;
using spectral::SpectrumClass;

namespace {

params::PhysicalParams on_manifold(double eta, double g1) {
    params::PseudoHermitianConfig cfg;
    cfg.eta = eta;
    cfg.g1 = g1;
    return params::derive_pseudo_hermitian(cfg, 1.0, 0.5);
}

}  // namespace

TEST_CASE("build_heff: entry layout and complex symmetry") {
    auto p = on_manifold(2.0, 2.4);
    p.delta_k = 0.05;
    const double dcp = 0.7;
    const auto h = spectral::build_heff(p, dcp);

    CHECK(h.entry(0, 0) == Complex{dcp, p.kappa_g()});
    // probe sector sees twice the mean-field Kerr shift
    CHECK(h.entry(1, 1)
          == Complex{dcp + p.delta1 + params::kProbeKerrFactor * p.delta_k, -p.gamma1});
    CHECK(h.entry(2, 2) == Complex{dcp + p.delta2, -p.gamma2});
    CHECK(h.entry(0, 1) == h.entry(1, 0));
    CHECK(h.entry(0, 2) == h.entry(2, 0));
    CHECK(h.entry(1, 2) == Complex{0.0, 0.0});
    CHECK(h.entry(0, 1) == Complex{p.g1, 0.0});
    CHECK(h.entry(0, 2) == Complex{p.g2, 0.0});
}

TEST_CASE("build_heff: rejects non-positive effective gain") {
    auto p = on_manifold(1.0, 1.3);
    p.kappa_int = p.kappa1 + p.kappa2 + 0.1;
    CHECK_THROWS_AS(spectral::build_heff(p, 0.0), ValidationError);
}

TEST_CASE("decoupled limit: eigenvalues are the diagonal entries") {
    params::PhysicalParams p;
    p.gamma1 = 0.7;
    p.gamma2 = 1.0;
    p.kappa_int = 0.5;
    p.kappa1 = 1.0;
    p.kappa2 = 1.2;
    p.g1 = 0.0;
    p.g2 = 0.0;
    p.delta1 = 0.9;
    p.delta2 = -1.4;
    const auto h = spectral::build_heff(p, 0.3);
    const auto t = spectral::eigenvalues(h);
    const std::array<Complex, 3> expected = {h.entry(0, 0), h.entry(1, 1), h.entry(2, 2)};
    CHECK(testing::root_set_distance(t.ordered(), expected) < 1e-12);
}

TEST_CASE("symmetric manifold: Omega_0 = delta_cp, Omega_pm = delta_cp +- sqrt(3g^2-4)") {
    const auto p = on_manifold(1.0, 2.0);
    for (const double dcp : {0.0, 0.37}) {
        CAPTURE(dcp);
        const auto t = spectral::eigenvalues(spectral::build_heff(p, dcp));
        const double s = std::sqrt(3.0 * 4.0 - 4.0);  // 2 sqrt(2)
        CHECK(std::abs(t.omega_zero - Complex{dcp, 0.0}) < 1e-10);
        CHECK(std::abs(t.omega_plus - Complex{dcp + s, 0.0}) < 1e-10);
        CHECK(std::abs(t.omega_minus - Complex{dcp - s, 0.0}) < 1e-10);
        CHECK(t.cls == SpectrumClass::ThreeReal);
    }
}

TEST_CASE("EP3: triple root at the closed-form coupling") {
    const auto p = on_manifold(1.0, params::g_ep3(1.0));
    const auto t = spectral::eigenvalues(spectral::build_heff(p, 0.0));
    CHECK(t.cls == SpectrumClass::Coalesced3);
    for (const auto& w : t.ordered()) CHECK(std::abs(w) < 1e-6);
}

TEST_CASE("EP3 for eta != 1: coalescence within cube-root rounding") {
    for (const double eta : {0.5, 2.0, 3.0}) {
        CAPTURE(eta);
        const auto p = on_manifold(eta, params::g_ep3(eta));
        // 1e-4 tolerance: a triple root built from double-precision entries
        // splays the roots by ~eps^(1/3).
        const auto t = spectral::eigenvalues(spectral::build_heff(p, 0.0), 1e-4);
        CHECK(t.cls == SpectrumClass::Coalesced3);
        const double w = params::omega_ep3(eta, 0.0);
        for (const auto& root : t.ordered()) CHECK(std::abs(root - w) < 5e-5);
    }
}

TEST_CASE("EP3 matrix is defective: rank(H - Omega I) = 2") {
    for (const double eta : {1.0, 2.0}) {
        CAPTURE(eta);
        const auto p = on_manifold(eta, params::g_ep3(eta));
        const auto h = spectral::build_heff(p, 0.0);
        const auto sv = testing::shifted_singular_values(h, params::omega_ep3(eta, 0.0));
        CHECK(sv[2] < 1e-8);   // numerically singular
        CHECK(sv[1] > 0.1);    // but only one vanishing direction
    }
}

TEST_CASE("classification on the eta=1 manifold") {
    CHECK(spectral::eigenvalues(spectral::build_heff(on_manifold(1.0, 2.0), 0.0)).cls
          == SpectrumClass::ThreeReal);
    CHECK(spectral::eigenvalues(spectral::build_heff(on_manifold(1.0, 1.05), 0.0)).cls
          == SpectrumClass::RealPlusConjugatePair);
}

TEST_CASE("classification: triple root input and tolerance validation") {
    const std::array<Complex, 3> triple = {Complex{1.0, 0.0}, Complex{1.0, 0.0},
                                           Complex{1.0, 0.0}};
    CHECK(spectral::classify_spectrum(triple) == SpectrumClass::Coalesced3);
    CHECK_THROWS_AS(spectral::classify_spectrum(triple, 0.0), ValidationError);
}

TEST_CASE("classification: EP2 on the eta=2 manifold is Coalesced2") {
    // Beyond the EP3 the pair persists until a second-order crossing.
    const double g_ep2 = 2.4;  // located numerically; D(g) crosses zero here
    const auto t = spectral::eigenvalues(
        spectral::build_heff(on_manifold(2.0, g_ep2), 0.0), 1e-3);
    CHECK(t.cls == SpectrumClass::Coalesced2);
    CHECK(spectral::eigenvalues(spectral::build_heff(on_manifold(2.0, 2.3), 0.0)).cls
          == SpectrumClass::RealPlusConjugatePair);
    CHECK(spectral::eigenvalues(spectral::build_heff(on_manifold(2.0, 2.6), 0.0)).cls
          == SpectrumClass::ThreeReal);
}

TEST_CASE("classification: generic complex triple reports Indeterminate") {
    const std::array<Complex, 3> generic = {Complex{0.3, 0.5}, Complex{-1.0, 0.2},
                                            Complex{2.0, -1.3}};
    CHECK(spectral::classify_spectrum(generic) == SpectrumClass::Indeterminate);
}

TEST_CASE("pseudo-Hermitian manifold never yields a generic complex triple") {
    for (const double eta : {0.5, 1.0, 2.0, 3.0}) {
        const double lo = params::g_min(eta);
        for (int i = 0; i <= 150; ++i) {
            const double g = lo + (3.0 - lo) * i / 150.0;
            if (g <= lo) continue;
            const auto t = spectral::eigenvalues(spectral::build_heff(on_manifold(eta, g), 0.0));
            CAPTURE(eta);
            CAPTURE(g);
            CHECK(t.cls != SpectrumClass::Indeterminate);
        }
    }
}

TEST_CASE("Vieta identities and oracle agreement on random parameter draws") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int i = 0; i < 10000; ++i) {
        const auto p = testing::random_params(rng);
        const auto h = spectral::build_heff(p, u(rng));
        CHECK(h.entry(0, 1) == h.entry(1, 0));
        CHECK(h.entry(0, 2) == h.entry(2, 0));
        CHECK(h.entry(1, 2) == h.entry(2, 1));
        const auto t = spectral::eigenvalues(h);
        const auto r = t.ordered();

        const Complex sum = r[0] + r[1] + r[2];
        const Complex prod = r[0] * r[1] * r[2];
        CHECK(std::abs(sum - h.trace()) < 1e-10);
        CHECK(std::abs(prod - h.determinant()) < 1e-10);

        // independent iterative polynomial-root oracle
        const auto [a, b, c] = h.char_poly();
        CHECK(testing::root_set_distance(r, testing::durand_kerner_cubic(a, b, c)) < 1e-9);
    }
}

TEST_CASE("closed form matches Eigen's matrix eigensolver") {
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int i = 0; i < 2000; ++i) {
        const auto p = testing::random_params(rng);
        const auto h = spectral::build_heff(p, u(rng));
        const auto mine = spectral::eigenvalues(h).ordered();
        CHECK(testing::root_set_distance(mine, testing::eigen_eigenvalues(h)) < 1e-9);
    }
}

TEST_CASE("find_ep3: closed-form agreement and bracket semantics") {
    CHECK(std::abs(spectral::find_ep3(1.0, 1.0, 1.3) - 2.0 / std::sqrt(3.0)) < 1e-9);
    CHECK(std::abs(spectral::find_ep3(2.0, 2.0, 2.5) - params::g_ep3(2.0)) < 1e-9);
    CHECK(std::abs(spectral::find_ep3(0.5, 0.5, 0.65) - params::g_ep3(0.5)) < 1e-9);
    CHECK(std::abs(spectral::find_ep3(3.0, 3.1, 3.6) - params::g_ep3(3.0)) < 1e-9);
    CHECK_THROWS_AS(spectral::find_ep3(1.0, 1.5, 2.0), NoRootInBracket);
    CHECK_THROWS_AS(spectral::find_ep3(1.0, 1.3, 1.0), ValidationError);
}

TEST_CASE("manifold discriminant signs on the symmetric manifold") {
    CHECK(spectral::manifold_discriminant(1.0, 1.05) < 0.0);  // conjugate pair
    CHECK(spectral::manifold_discriminant(1.0, 1.4) > 0.0);   // three real
}

TEST_CASE("continuity tracking keeps branch labels along a sweep") {
    // Sweep g through the EP3; per-point sorting would swap branches, the
    // tracker must keep each label on a continuous curve.
    auto prev = spectral::eigenvalues(spectral::build_heff(on_manifold(1.0, 1.02), 0.0));
    double last_plus = prev.omega_plus.imag();
    for (int i = 1; i <= 200; ++i) {
        const double g = 1.02 + (1.40 - 1.02) * i / 200.0;
        const auto roots = spectral::eigenvalues(spectral::build_heff(on_manifold(1.0, g), 0.0));
        const auto tracked = spectral::track_labels(prev, roots.ordered());
        // steps stay small relative to the sweep increment
        const double step = std::abs(tracked.omega_plus - prev.omega_plus);
        CHECK(step < 0.2);
        prev = tracked;
        last_plus = tracked.omega_plus.imag();
    }
    CHECK(std::abs(last_plus) < 1e-10);  // ends in the three-real phase
}

TEST_CASE("pair_by_continuity picks the identity when already aligned") {
    const std::array<Complex, 3> a = {Complex{0, 0}, Complex{1, 1}, Complex{2, -1}};
    const std::array<Complex, 3> b = {Complex{0.1, 0}, Complex{1.1, 1}, Complex{2.1, -1}};
    const auto m = spectral::pair_by_continuity(a, b);
    CHECK(m[0] == b[0]);
    CHECK(m[1] == b[1]);
    CHECK(m[2] == b[2]);
}
