#include "ep3sim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ep3sim/cubic.hpp"
#include "ep3sim/errors.hpp"

namespace ep3sim::spectral {

Complex EffectiveHamiltonian::determinant() const {
    // (1,2) and (2,1) vanish by construction.
    return m[0][0] * m[1][1] * m[2][2]
           - m[0][1] * m[1][0] * m[2][2]
           - m[0][2] * m[2][0] * m[1][1];
}

std::array<Complex, 3> EffectiveHamiltonian::char_poly() const {
    const Complex a = -trace();
    const Complex e2 = m[0][0] * m[1][1] + m[0][0] * m[2][2] + m[1][1] * m[2][2]
                       - m[0][1] * m[1][0] - m[0][2] * m[2][0];
    const Complex c = -determinant();
    return {a, e2, c};
}

EffectiveHamiltonian build_heff(const params::PhysicalParams& p, double delta_cp) {
    p.validate();
    if (p.kappa_g() <= 0.0) {
        throw ValidationError("kappa_g = kappa1 + kappa2 - kappa_int must be > 0 "
                              "for the CPA effective Hamiltonian");
    }
    EffectiveHamiltonian h;
    h.source = p;
    h.delta_cp = delta_cp;
    const double d1p = delta_cp + p.delta1;
    const double d2p = delta_cp + p.delta2;
    h.m[0][0] = Complex{delta_cp, p.kappa_g()};
    h.m[1][1] = Complex{d1p + params::kProbeKerrFactor * p.delta_k, -p.gamma1};
    h.m[2][2] = Complex{d2p, -p.gamma2};
    h.m[0][1] = h.m[1][0] = Complex{p.g1, 0.0};
    h.m[0][2] = h.m[2][0] = Complex{p.g2, 0.0};
    h.m[1][2] = h.m[2][1] = Complex{0.0, 0.0};
    return h;
}

SpectrumClass classify_spectrum(const std::array<Complex, 3>& r, double tol) {
    if (!(tol > 0.0)) throw ValidationError("classification tolerance must be > 0");

    const double d01 = std::abs(r[0] - r[1]);
    const double d02 = std::abs(r[0] - r[2]);
    const double d12 = std::abs(r[1] - r[2]);
    if (d01 < tol && d02 < tol && d12 < tol) return SpectrumClass::Coalesced3;
    if (d01 < tol || d02 < tol || d12 < tol) return SpectrumClass::Coalesced2;

    int n_real = 0;
    int real_idx = -1;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(r[i].imag()) < tol) {
            ++n_real;
            real_idx = i;
        }
    }
    if (n_real == 3) return SpectrumClass::ThreeReal;
    if (n_real == 1) {
        const int a = (real_idx + 1) % 3;
        const int b = (real_idx + 2) % 3;
        if (std::abs(r[a] - std::conj(r[b])) < tol)
            return SpectrumClass::RealPlusConjugatePair;
    }
    return SpectrumClass::Indeterminate;
}

namespace {

SpectrumTriple label_roots(std::array<Complex, 3> r, double tol) {
    SpectrumTriple t;
    t.cls = classify_spectrum(r, tol);

    if (t.cls == SpectrumClass::RealPlusConjugatePair) {
        // Zero branch = the (most) real eigenvalue, pair labeled by Im sign.
        std::sort(r.begin(), r.end(), [](const Complex& a, const Complex& b) {
            return std::abs(a.imag()) < std::abs(b.imag());
        });
        t.omega_zero = r[0];
        t.omega_plus = (r[1].imag() > r[2].imag()) ? r[1] : r[2];
        t.omega_minus = (r[1].imag() > r[2].imag()) ? r[2] : r[1];
        t.label_rule = LabelRule::PseudoHermitianPair;
        return t;
    }

    // All-real-ish spectra (and anything else, as a stable fallback):
    // ascending real part, ties broken by imaginary part.
    std::sort(r.begin(), r.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    t.omega_minus = r[0];
    t.omega_zero = r[1];
    t.omega_plus = r[2];
    t.label_rule = LabelRule::RealSorted;
    return t;
}

}  // namespace

SpectrumTriple eigenvalues(const EffectiveHamiltonian& h, double tol) {
    // H(delta_cp) = delta_cp * I + H(0) exactly, so solve the cubic with the
    // common diagonal part removed and shift the roots back. Near a triple
    // root this avoids the cube-root amplification of coefficient rounding
    // that a large delta_cp would otherwise cause.
    EffectiveHamiltonian shifted = h;
    for (int i = 0; i < 3; ++i) shifted.m[i][i] -= h.delta_cp;
    const auto [a, b, c] = shifted.char_poly();
    auto roots = cubic::solve_monic_complex(a, b, c);
    for (auto& r : roots) r += h.delta_cp;
    return label_roots(roots, tol);
}

std::array<Complex, 3> pair_by_continuity(const std::array<Complex, 3>& previous,
                                          const std::array<Complex, 3>& current) {
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    double best = std::numeric_limits<double>::infinity();
    std::array<Complex, 3> out = current;
    for (const auto& p : perms) {
        const double cost = std::abs(current[p[0]] - previous[0])
                            + std::abs(current[p[1]] - previous[1])
                            + std::abs(current[p[2]] - previous[2]);
        if (cost < best) {
            best = cost;
            out = {current[p[0]], current[p[1]], current[p[2]]};
        }
    }
    return out;
}

SpectrumTriple track_labels(const SpectrumTriple& previous,
                            const std::array<Complex, 3>& current_roots,
                            double tol) {
    const auto matched = pair_by_continuity(previous.ordered(), current_roots);
    SpectrumTriple t;
    t.omega_minus = matched[0];
    t.omega_zero = matched[1];
    t.omega_plus = matched[2];
    t.cls = classify_spectrum(current_roots, tol);
    t.label_rule = LabelRule::ContinuityTracked;
    return t;
}

namespace {

// Real coefficients of the monic on-manifold characteristic cubic at
// coupling g1 (delta_k = 0, delta_cp = 0). Pseudo-Hermiticity makes them
// real; anything else indicates an off-manifold parameter set.
std::array<double, 3> manifold_char_poly(double eta, double g1, int delta1_sign) {
    params::PseudoHermitianConfig cfg;
    cfg.eta = eta;
    cfg.g1 = g1;
    cfg.delta1_sign = delta1_sign;
    // kappa_int / port_split do not enter the spectrum; any valid pick works.
    const auto p = params::derive_pseudo_hermitian(cfg, 1.0, 0.5);
    const auto h = build_heff(p, 0.0);
    const auto [a, b, c] = h.char_poly();

    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), 1.0});
    const double imag_leak =
        std::max({std::abs(a.imag()), std::abs(b.imag()), std::abs(c.imag())});
    if (imag_leak > 1e-9 * scale) {
        throw NumericalError("characteristic polynomial is not real: parameters "
                             "are off the pseudo-Hermitian manifold");
    }
    return {a.real(), b.real(), c.real()};
}

// Linear coefficient p of the depressed on-manifold cubic w^3 + p w + q.
// The EP3 needs p = q = 0; p crosses zero transversally in g1 while the
// discriminant -4p^3 - 27q^2 only touches zero there for eta != 1, so p is
// the robust bisection target.
double manifold_depressed_p(double eta, double g1) {
    const auto [A, B, C] = manifold_char_poly(eta, g1, +1);
    (void)C;
    return B - A * A / 3.0;
}

}  // namespace

double manifold_discriminant(double eta, double g1, int delta1_sign) {
    const auto [A, B, C] = manifold_char_poly(eta, g1, delta1_sign);
    return cubic::discriminant_monic_real(A, B, C);
}

double find_ep3(double eta, double g_lo, double g_hi) {
    if (!(eta > 0.0)) throw ValidationError("eta must be > 0");
    if (!(g_lo < g_hi)) throw ValidationError("invalid bracket: need g_lo < g_hi");

    // The manifold only exists for g1 >= g_min; trim brackets that dip below.
    const double floor = params::g_min(eta) + 1e-9;
    double lo = std::max(g_lo, floor);
    double hi = g_hi;
    if (!(lo < hi)) {
        throw NoRootInBracket("coupling bracket lies below g_min(eta)");
    }

    double f_lo = manifold_depressed_p(eta, lo);
    double f_hi = manifold_depressed_p(eta, hi);
    if ((f_lo > 0.0) == (f_hi > 0.0) && f_lo != 0.0 && f_hi != 0.0) {
        throw NoRootInBracket("cubic discriminant has no zero inside the "
                              "requested coupling bracket");
    }

    while (hi - lo > 1e-14 * std::max(1.0, std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = manifold_depressed_p(eta, mid);
        if (f_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    const double g_star = 0.5 * (lo + hi);

    // A p-zero with a surviving constant term would be a plain avoided
    // crossing, not a triple point; on the manifold q vanishes with p.
    const double disc = manifold_discriminant(eta, g_star);
    if (std::abs(disc) > 1e-8) {
        throw NumericalError("discriminant does not vanish at the located "
                             "coupling: no EP3 in the bracket");
    }
    return g_star;
}

}  // namespace ep3sim::spectral
