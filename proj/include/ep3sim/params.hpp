#pragma once

// Physical parameter model of the two-magnon-mode cavity system and the
// closed-form third-order exceptional point (EP3) quantities. Everything is
// expressed in units of the reference magnon decay rate gamma2; an absolute
// scale only matters for display and never enters the math.
//
// The pseudo-Hermitian manifold is the constraint set
//   kappa_g = (1 + eta) gamma2
//   Delta2  = -eta Delta1
//   Delta1^2 = (1 + eta k^2) / ((1 + eta) eta) g1^2 - gamma2^2
//   k = [(1 + 2 eta) / (2 eta + eta^2)]^(3/2)
// with eta = gamma1/gamma2 and k = g2/g1. On it the effective Hamiltonian
// has real eigenvalues or a real value plus a conjugate pair, and hosts an
// EP3 at g1 = g_ep3(eta).

#include <array>

#include "ep3sim/types.hpp"

namespace ep3sim::params {

// Diagonal frequency shift seen by probe fluctuations, in units of the
// mean-field magnon shift Delta_K = 2 K1 |B1|^2. Linearizing the Kerr term
// K1 (b'b)^2 about a coherent steady state gives a fluctuation diagonal of
// 2 Delta_K (the anomalous b'^2 term is dropped); the published spectra and
// the Puiseux coefficients both correspond to this doubled value.
inline constexpr double kProbeKerrFactor = 2.0;

struct PhysicalParams {
    double gamma1 = 1.0;     // magnon-1 decay rate
    double gamma2 = 1.0;     // magnon-2 decay rate, the unit of everything
    double kappa_int = 1.0;  // intrinsic cavity decay
    double kappa1 = 1.5;     // port-1 induced cavity decay
    double kappa2 = 1.5;     // port-2 induced cavity decay
    double g1 = 0.0;         // cavity <-> magnon-1 coupling
    double g2 = 0.0;         // cavity <-> magnon-2 coupling
    double delta1 = 0.0;     // Delta_1 = omega_1 - omega_c
    double delta2 = 0.0;     // Delta_2 = omega_2 - omega_c
    double delta_k = 0.0;    // Kerr-induced magnon-1 frequency shift, >= 0

    double kappa_c() const { return kappa_int + kappa1 + kappa2; }
    double kappa_g() const { return kappa1 + kappa2 - kappa_int; }
    double eta() const { return gamma1 / gamma2; }

    PhysicalParams with_delta_k(double dk) const {
        PhysicalParams p = *this;
        p.delta_k = dk;
        return p;
    }

    // Throws ValidationError on non-positive rates, negative couplings or a
    // negative Kerr shift.
    void validate() const;
};

struct PseudoHermitianConfig {
    double eta = 1.0;       // gamma1/gamma2
    double g1 = 0.0;        // coupling strength, must be >= g_min(eta)
    int delta1_sign = +1;   // branch of Delta1 = +-sqrt(Delta1^2)

    // k = g2/g1 fixed by the last manifold constraint.
    double k_ratio() const;

    void validate() const;
};

// Smallest coupling with a real Delta1 on the manifold.
double g_min(double eta);

// EP3 coupling g_EP3 = 2 eta sqrt(eta^2 + 2 eta) / (1 + 2 eta) * gamma2.
double g_ep3(double eta);

// Coalesced eigenvalue at the EP3:
//   Omega_EP3 = delta_cp - sqrt(3) (eta - 1) eta / (2 eta^2 + 5 eta + 2).
double omega_ep3(double eta, double delta_cp);

// Coalesced (normalized) eigenvector at the EP3.
std::array<Complex, 3> ep3_eigenvector(double eta);

// Materializes a full parameter set from a manifold configuration.
// kappa1 + kappa2 = (1 + eta) gamma2 + kappa_int, split as
// kappa1 = port_split * (kappa1 + kappa2). Throws ValidationError when
// g1 < g_min(eta) (negative radicand) or rates are out of range.
PhysicalParams derive_pseudo_hermitian(const PseudoHermitianConfig& config,
                                       double kappa_int, double port_split);

// True when `p` satisfies all four manifold constraints to relative
// tolerance `tol` (default matches the documented config validation).
bool is_pseudo_hermitian(const PhysicalParams& p, double tol = 1e-9);

}  // namespace ep3sim::params
