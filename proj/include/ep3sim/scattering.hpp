#pragma once

// Steady-state probe response of the two-port cavity: self-energy, output
// spectrum S, CPA verification, dip extraction and the sensitivity
// enhancement factor delta_omega_p / Delta_K.
//
// The spectrum axis used throughout is the probe offset from the cavity,
// nu = omega_p - omega_c, in units of gamma2. In terms of the detuning
// delta_cp = omega_c - omega_p = -nu,
//
//   S(nu) = (2 kappa1 + 2 kappa2) / (kappa_c + i delta_cp + Sigma) - 1,
//   Sigma = g1^2 / (gamma1 + i (delta_1p + 2 Delta_K)) + g2^2 / (gamma2 + i delta_2p),
//   delta_jp = delta_cp + Delta_j,
//
// where the doubled Kerr shift is the probe-sector diagonal (see
// params::kProbeKerrFactor). On this axis S vanishes exactly at the real
// eigenvalues of H_eff(0): the CPA points and spectrum dips line up with the
// spectrum of the effective Hamiltonian, which is what makes the dip
// distance an eigenvalue probe.

#include <functional>
#include <optional>
#include <vector>

#include "ep3sim/params.hpp"
#include "ep3sim/types.hpp"

namespace ep3sim::scattering {

// Self-energy of the cavity due to the two magnon modes. `delta_k_diag` is
// the diagonal shift of magnon 1 as it appears in the response denominator;
// callers working with the mean-field shift Delta_K pass
// kProbeKerrFactor * Delta_K (s_parameter does this internally).
Complex self_energy(const params::PhysicalParams& p, double delta_1p,
                    double delta_2p, double delta_k_diag);

// Output spectrum amplitude at probe offset nu = omega_p - omega_c for
// mean-field Kerr shift delta_k.
Complex s_parameter(const params::PhysicalParams& p, double nu, double delta_k);

// CPA input-field ratio <a2_in> / <a1_in> = sqrt(kappa2 / kappa1).
double cpa_input_ratio(const params::PhysicalParams& p);

struct PortOutputs {
    Complex a1_out;
    Complex a2_out;
};

// Per-port output amplitudes for arbitrary (not necessarily CPA-ratio)
// inputs at probe offset nu.
PortOutputs port_outputs(const params::PhysicalParams& p, double nu,
                         double delta_k, Complex a1_in, Complex a2_in);

struct SpectrumTrace {
    std::vector<double> nu;      // strictly increasing probe offsets
    std::vector<double> s_abs2;  // |S|^2 >= 0
    params::PhysicalParams source;
    double delta_k = 0.0;
};

// Default scan window: Omega_EP3(eta) +- 3 gamma2, 20001 points.
inline constexpr double kDefaultWindowHalfWidth = 3.0;
inline constexpr int kDefaultScanPoints = 20001;

struct Window {
    double lo = -kDefaultWindowHalfWidth;
    double hi = +kDefaultWindowHalfWidth;
};

Window default_window(const params::PhysicalParams& p);

// Uniform-grid evaluation of |S|^2 over `window`; throws ValidationError on
// a degenerate window or fewer than 2 points.
SpectrumTrace scan(const params::PhysicalParams& p, double delta_k,
                   Window window, int n_points = kDefaultScanPoints);

// A grid minimum qualifies as a dip when its refined |S|^2 lies below
// kDipProminenceRatio times the lower of its two flanking maxima. At
// Delta_K/gamma2 = 1e-3 the two dips sit in a common absorption basin and
// the shallower one rises to 0.987 of the ridge between them (eta = 3), so
// the filter keeps anything with at least 0.5% modulation and drops
// floating-point ripple.
inline constexpr double kDipProminenceRatio = 0.995;

struct DipReport {
    double dip1 = 0.0;   // left dip position (probe offset, units of gamma2)
    double dip2 = 0.0;   // right dip position, dip1 <= dip2
    double depth1 = 0.0; // |S|^2 at the refined dips
    double depth2 = 0.0;
    double delta_omega_p = 0.0;             // dip2 - dip1 >= 0
    std::optional<double> enhancement;      // delta_omega_p / Delta_K, Delta_K > 0
    int dip_count = 0;                      // qualifying dips found
};

// Locates the two dips of a near-EP3 spectrum: strict local minima of the
// sampled trace, each refined by golden-section search on the continuous
// |S|^2 to 1e-8, filtered by the prominence rule. Throws DipCountMismatch
// when the number of qualifying dips is not exactly two.
DipReport find_dips(const SpectrumTrace& trace,
                    double prominence_ratio = kDipProminenceRatio);

struct EnhancementRow {
    double eta = 0.0;
    double xi = 0.0;              // Delta_K / gamma2
    double delta_omega_p = 0.0;   // units of gamma2
    double enhancement = 0.0;     // delta_omega_p / Delta_K
};

// Dip distance and enhancement factor over an (eta, xi) grid, every point
// evaluated at the EP3 coupling g1 = g_ep3(eta) with kappa_int = gamma2 and
// an even port split. DipCountMismatch is rethrown with the offending cell.
std::vector<EnhancementRow> enhancement_curve(const std::vector<double>& eta_list,
                                              const std::vector<double>& xi_list,
                                              double kappa_int = 1.0,
                                              double port_split = 0.5,
                                              int n_points = kDefaultScanPoints);

// Golden-section minimizer used by the dip refinement; exposed for reuse.
double golden_section_minimize(const std::function<double(double)>& f,
                               double a, double b, double xtol);

}  // namespace ep3sim::scattering
