#pragma once

// Effective non-Hermitian Hamiltonian of the CPA-pumped cavity-magnon
// system and its exact spectrum. The matrix is 3x3 complex symmetric with
// one zero coupling, so the characteristic polynomial is a complex cubic
// solved in closed form; no general eigensolver is involved.
//
//   H_eff = [ delta_cp + i kappa_g      g1                   g2             ]
//           [ g1                        d1p + 2 dK - i gamma1 0             ]
//           [ g2                        0                    d2p - i gamma2 ]
//
// with d_jp = delta_cp + Delta_j and dK the mean-field magnon shift (the
// probe sector sees twice it, see params::kProbeKerrFactor).
// H_eff(delta_cp) = delta_cp * I + H_eff(0), so eigenvalues shift rigidly
// with the probe detuning.

#include <array>

#include "ep3sim/params.hpp"
#include "ep3sim/types.hpp"

namespace ep3sim::spectral {

struct EffectiveHamiltonian {
    std::array<std::array<Complex, 3>, 3> m{};
    params::PhysicalParams source;
    double delta_cp = 0.0;

    const Complex& entry(int r, int c) const { return m[r][c]; }

    Complex trace() const { return m[0][0] + m[1][1] + m[2][2]; }
    Complex determinant() const;

    // Coefficients (a, b, c) of the monic characteristic polynomial
    // L^3 + a L^2 + b L + c = det(L*I - H) ... sign-adjusted so that the
    // roots are the eigenvalues.
    std::array<Complex, 3> char_poly() const;
};

enum class SpectrumClass {
    ThreeReal,
    RealPlusConjugatePair,
    Coalesced2,
    Coalesced3,
    Indeterminate,  // pattern matches no pseudo-Hermitian class
};

enum class LabelRule {
    RealSorted,            // ascending real part -> (minus, zero, plus)
    PseudoHermitianPair,   // real eigenvalue is zero-branch, pair by Im sign
    ContinuityTracked,     // matched against a previous triple
};

// Default absolute coalescence tolerance (units of gamma2). Cube-root
// sensitivity near the EP3 makes much tighter tolerances misclassify.
inline constexpr double kCoalescenceTol = 1e-7;

struct SpectrumTriple {
    Complex omega_minus;
    Complex omega_zero;
    Complex omega_plus;
    SpectrumClass cls = SpectrumClass::Indeterminate;
    LabelRule label_rule = LabelRule::RealSorted;

    std::array<Complex, 3> ordered() const {
        return {omega_minus, omega_zero, omega_plus};
    }
};

// Builds H_eff; throws ValidationError when params are invalid or the
// effective gain kappa_g is not positive (no CPA picture).
EffectiveHamiltonian build_heff(const params::PhysicalParams& p, double delta_cp);

SpectrumClass classify_spectrum(const std::array<Complex, 3>& roots,
                                double tol = kCoalescenceTol);

// Exact eigenvalues via the closed-form cubic plus one Newton polish,
// labeled and classified with tolerance `tol`.
SpectrumTriple eigenvalues(const EffectiveHamiltonian& h,
                           double tol = kCoalescenceTol);

// Reorders `current` by the permutation minimizing the total distance to
// `previous`; used to keep branch labels continuous along sweeps.
std::array<Complex, 3> pair_by_continuity(const std::array<Complex, 3>& previous,
                                          const std::array<Complex, 3>& current);

// Relabels an existing triple against a reference one (sweep stepping).
SpectrumTriple track_labels(const SpectrumTriple& previous,
                            const std::array<Complex, 3>& current_roots,
                            double tol = kCoalescenceTol);

// Real discriminant of the characteristic cubic of the on-manifold
// Hamiltonian at coupling g1 (delta_k = 0, delta_cp = 0). Positive for three
// distinct real eigenvalues, negative for a conjugate pair.
double manifold_discriminant(double eta, double g1, int delta1_sign = +1);

// Coupling g1 where the on-manifold discriminant vanishes (the EP3),
// located to better than 1e-10. For eta != 1 the discriminant only touches
// zero at the EP3 (a conjugate pair survives on both sides), so the search
// bisects the depressed cubic's linear coefficient, which changes sign
// there, and then verifies the discriminant is zero. Brackets reaching
// below g_min are trimmed. Throws NoRootInBracket when the bracket holds
// no zero.
double find_ep3(double eta, double g_lo, double g_hi);

}  // namespace ep3sim::spectral
