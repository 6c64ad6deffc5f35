#include "ep3sim/puiseux.hpp"

#include <algorithm>
#include <cmath>

#include "ep3sim/cubic.hpp"
#include "ep3sim/errors.hpp"

namespace ep3sim::puiseux {

namespace {

Complex kerr_direction(double eta) {
    // 2 eta [sqrt(3) - i (1 + 2 eta)] / (1 + 2 eta); recurs in f1 and f4/3.
    return 2.0 * eta * Complex{std::sqrt(3.0), -(1.0 + 2.0 * eta)}
           / (1.0 + 2.0 * eta);
}

}  // namespace

Complex f1_residual(double eta, Complex lambda1) {
    const Complex rhs =
        4.0 * eta * eta * Complex{1.0, -std::sqrt(3.0)} / (1.0 + 2.0 * eta);
    return lambda1 * lambda1 * lambda1 - rhs;
}

Complex f43_residual(double eta, Complex lambda1, Complex lambda2) {
    return 3.0 * lambda1 * lambda1 * lambda2 - kerr_direction(eta) * lambda1;
}

PuiseuxSolution puiseux_coefficients(double eta) {
    if (!(eta > 0.0)) throw ValidationError("eta must be > 0");

    PuiseuxSolution s;
    s.eta = eta;
    const double modulus =
        std::cbrt(8.0 * eta * eta / (1.0 + 2.0 * eta));
    const Complex dir = kerr_direction(eta);
    for (int l = 0; l < 3; ++l) {
        s.lambda1[l] = std::polar(modulus, s.theta[l]);
        s.lambda2[l] = dir / (3.0 * s.lambda1[l]);
    }
    return s;
}

spectral::SpectrumTriple eigenvalues_near_ep3(double eta, double delta_cp,
                                              double xi) {
    if (!(xi > 0.0)) {
        throw ValidationError("xi must be > 0: the expansion is derived for a "
                              "positive Kerr shift (K1 > 0)");
    }
    const auto s = puiseux_coefficients(eta);
    const double w = params::omega_ep3(eta, delta_cp);
    const double x13 = std::cbrt(xi);
    const double x23 = x13 * x13;

    spectral::SpectrumTriple t;
    t.omega_plus = w + s.lambda1[0] * x13 + s.lambda2[0] * x23;
    t.omega_zero = w + s.lambda1[1] * x13 + s.lambda2[1] * x23;
    t.omega_minus = w + s.lambda1[2] * x13 + s.lambda2[2] * x23;
    t.cls = spectral::classify_spectrum(t.ordered());
    t.label_rule = spectral::LabelRule::ContinuityTracked;
    return t;
}

spectral::SpectrumTriple exact_eigenvalues_at_ep3(double eta, double delta_cp,
                                                  double xi) {
    params::PseudoHermitianConfig cfg;
    cfg.eta = eta;
    cfg.g1 = params::g_ep3(eta);
    const auto base = params::derive_pseudo_hermitian(cfg, 1.0, 0.5);
    const auto h = spectral::build_heff(base.with_delta_k(xi), delta_cp);
    const auto [a, b, c] = h.char_poly();
    const auto roots = cubic::solve_monic_complex(a, b, c);

    // Label the exact roots by proximity to the Puiseux branches.
    const auto series = eigenvalues_near_ep3(eta, delta_cp, xi);
    return spectral::track_labels(series, roots);
}

SplittingFit splitting_exponent_fit(double eta,
                                    const std::vector<double>& xi_samples) {
    if (xi_samples.size() < 5) {
        throw InsufficientSamples("splitting fit needs at least 5 xi samples");
    }
    std::vector<double> xs = xi_samples;
    std::sort(xs.begin(), xs.end());
    if (!(xs.front() > 0.0)) {
        throw InsufficientSamples("xi samples must be positive");
    }
    if (xs.back() > 1e-2) {
        throw InsufficientSamples("splitting fit requires every xi <= 1e-2");
    }
    if (xs.back() / xs.front() < 100.0) {
        throw InsufficientSamples("xi samples must span at least two decades");
    }

    const double w_ep3 = params::omega_ep3(eta, 0.0);
    std::vector<double> lx, ly;
    lx.reserve(xs.size());
    ly.reserve(xs.size());
    for (const double xi : xs) {
        const auto exact = exact_eigenvalues_at_ep3(eta, 0.0, xi);
        lx.push_back(std::log(xi));
        ly.push_back(std::log(std::abs(exact.omega_plus.real() - w_ep3)));
    }

    const auto n = static_cast<double>(lx.size());
    double sx = 0.0, sy = 0.0;
    for (size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }

    SplittingFit fit;
    fit.n_samples = static_cast<int>(lx.size());
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (size_t i = 0; i < lx.size(); ++i) {
        const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
        ss_res += r * r;
    }
    fit.slope_stderr = std::sqrt(ss_res / (n - 2.0) / sxx);
    return fit;
}

}  // namespace ep3sim::puiseux
