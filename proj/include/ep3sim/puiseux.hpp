#pragma once

// Newton-Puiseux expansion of the eigenvalues around the EP3 in the Kerr
// perturbation xi = Delta_K / gamma2:
//
//   Omega_l = Omega_EP3 + lambda1_l xi^(1/3) gamma2 + lambda2_l xi^(2/3) gamma2
//
// The leading coefficients are the three cube roots of
// 4 eta^2 (1 - sqrt(3) i) / (1 + 2 eta), written with explicit branch phases
//   theta_plus = 17 pi / 9, theta_zero = 5 pi / 9, theta_minus = 11 pi / 9.
// The branch identity lives entirely in those phases, so the modulus and the
// phase are assembled separately instead of calling a generic complex power.

#include <array>
#include <vector>

#include "ep3sim/spectral.hpp"
#include "ep3sim/types.hpp"

namespace ep3sim::puiseux {

inline constexpr double kThetaPlus = 17.0 * kPi / 9.0;
inline constexpr double kThetaZero = 5.0 * kPi / 9.0;
inline constexpr double kThetaMinus = 11.0 * kPi / 9.0;

// Two-term series visibly diverges from the exact spectrum beyond this.
inline constexpr double kTruncationXi = 0.3;

inline bool exceeds_truncation_range(double xi) { return xi > kTruncationXi; }

struct PuiseuxSolution {
    double eta = 1.0;
    // Branch order: [0] = plus, [1] = zero, [2] = minus.
    std::array<Complex, 3> lambda1{};
    std::array<Complex, 3> lambda2{};
    std::array<double, 3> theta{kThetaPlus, kThetaZero, kThetaMinus};
};

// Residuals of the two leading characteristic-equation coefficients that the
// solution must annihilate; both vanish identically for the closed form.
Complex f1_residual(double eta, Complex lambda1);
Complex f43_residual(double eta, Complex lambda1, Complex lambda2);

PuiseuxSolution puiseux_coefficients(double eta);

// Series eigenvalues at perturbation xi > 0 (throws ValidationError for
// xi <= 0; the expansion assumes a positive Kerr shift). Callers should
// consult exceeds_truncation_range() before trusting xi > 0.3.
spectral::SpectrumTriple eigenvalues_near_ep3(double eta, double delta_cp,
                                              double xi);

struct SplittingFit {
    double slope = 0.0;        // of log|Re Omega_plus - Omega_EP3| vs log xi
    double slope_stderr = 0.0; // standard error of the slope
    double intercept = 0.0;
    int n_samples = 0;
};

// Least-squares exponent of the real splitting versus xi, computed from the
// exact spectrum at g1 = g_ep3(eta). Requires at least 5 samples spanning at
// least two decades with every xi <= 1e-2 (throws InsufficientSamples).
SplittingFit splitting_exponent_fit(double eta,
                                    const std::vector<double>& xi_samples);

// Exact spectrum on the EP3 manifold point with Kerr shift xi, labeled by
// minimal-distance matching to the Puiseux branches at small xi and by
// continuity along increasing xi. Shared by the fit and by consistency tests.
spectral::SpectrumTriple exact_eigenvalues_at_ep3(double eta, double delta_cp,
                                                  double xi);

}  // namespace ep3sim::puiseux
