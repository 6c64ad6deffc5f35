#pragma once

// Eigen-backed test oracles: the QR-based matrix eigensolver (independent of
// the characteristic-polynomial route) and singular values for rank checks.
// The polynomial-root oracle lives in polyroots.hpp. Nothing in here is
// linked into the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "ep3sim/params.hpp"
#include "ep3sim/spectral.hpp"
#include "support/polyroots.hpp"

namespace ep3sim::testing {

inline Eigen::Matrix3cd to_eigen(const spectral::EffectiveHamiltonian& h) {
    Eigen::Matrix3cd m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r, c) = h.entry(r, c);
    return m;
}

// Eigenvalues straight from the matrix via Eigen's complex Schur reduction.
inline std::array<Complex, 3> eigen_eigenvalues(const spectral::EffectiveHamiltonian& h) {
    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(to_eigen(h), false);
    const auto& ev = solver.eigenvalues();
    return {ev(0), ev(1), ev(2)};
}

// Singular values of (H - omega I), descending.
inline std::array<double, 3> shifted_singular_values(
    const spectral::EffectiveHamiltonian& h, Complex omega) {
    Eigen::Matrix3cd m = to_eigen(h) - omega * Eigen::Matrix3cd::Identity();
    Eigen::JacobiSVD<Eigen::Matrix3cd> svd(m);
    const auto& sv = svd.singularValues();
    return {sv(0), sv(1), sv(2)};
}

// Random physically sensible parameter sets (kappa_g > 0 enforced so the
// effective Hamiltonian exists). Off the pseudo-Hermitian manifold.
inline params::PhysicalParams random_params(std::mt19937& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    params::PhysicalParams p;
    p.gamma2 = 1.0;
    p.gamma1 = 0.1 + 2.9 * u01(rng);
    p.kappa1 = 0.3 + 2.7 * u01(rng);
    p.kappa2 = 0.3 + 2.7 * u01(rng);
    p.kappa_int = std::min(0.2 + 1.8 * u01(rng), 0.9 * (p.kappa1 + p.kappa2));
    p.g1 = 3.0 * u01(rng);
    p.g2 = 3.0 * u01(rng);
    p.delta1 = -4.0 + 8.0 * u01(rng);
    p.delta2 = -4.0 + 8.0 * u01(rng);
    p.delta_k = 0.5 * u01(rng);
    return p;
}

}  // namespace ep3sim::testing
