#pragma once

// Driven steady state of the strong-drive sector, solved self-consistently
// with the Kerr shift Delta_K = 2 K1 |B1|^2. Eliminating the cavity and the
// linear magnon gives B1 = -Omega_d / chi(m) with
//
//   chi(m) = delta_1d + 2 K1 m - i gamma1 - g1^2 / D,
//   D      = delta_cd - i kappa_c - g2^2 / (delta_2d - i gamma2),
//
// so the occupation m = |B1|^2 solves the real cubic m |chi(m)|^2 = Omega_d^2.
// Note the drive sector sees the full cavity damping kappa_c, not the CPA
// gain kappa_g.

#include <vector>

#include "ep3sim/params.hpp"
#include "ep3sim/types.hpp"

namespace ep3sim::kerr {

struct DriveConfig {
    double delta_cd = 0.0;     // cavity-drive detuning
    double delta_1d = 0.0;     // magnon-1-drive detuning
    double delta_2d = 0.0;     // magnon-2-drive detuning
    double omega_d_rabi = 0.0; // drive strength Omega_d, >= 0
    double kerr_k1 = 0.0;      // Kerr coefficient K1 per excitation, >= 0

    void validate() const;
};

struct SteadyStateBranch {
    Complex a;        // cavity amplitude
    Complex b1;       // Kerr magnon amplitude
    Complex b2;       // linear magnon amplitude
    double m = 0.0;   // occupation |b1|^2
    double delta_k = 0.0;  // 2 K1 m
};

struct SteadyStateResult {
    std::vector<SteadyStateBranch> branches;  // ascending in m
    bool multistable = false;                 // more than one branch
    double cubic_discriminant = 0.0;          // of the occupation cubic
};

// All steady-state branches for the given drive. Every non-negative real
// root of the occupation cubic becomes a branch; for Omega_d > 0 at least
// one exists. The smallest-m branch is the one reached adiabatically from
// zero drive and is the default for downstream Delta_K.
SteadyStateResult steady_state(const params::PhysicalParams& p,
                               const DriveConfig& drive);

// Maximum residual of the three stationary equations for a branch,
// normalized by the amplitude scale max(1, |a|, |b1|, |b2|).
double branch_residual(const params::PhysicalParams& p, const DriveConfig& drive,
                       const SteadyStateBranch& branch);

// Drive strength whose steady state contains a branch with
// Delta_K = target_delta_k, from m = target / (2 K1) and
// Omega_d^2 = m |chi(m)|^2. Requires kerr_k1 > 0 and target >= 0.
double drive_for_target_shift(const params::PhysicalParams& p,
                              const DriveConfig& drive_template,
                              double target_delta_k);

}  // namespace ep3sim::kerr
