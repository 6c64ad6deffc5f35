#include "ep3sim/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ep3sim/errors.hpp"

namespace ep3sim::scattering {

namespace {

// Denominator kappa_c + i delta_cp + Sigma at probe offset nu (delta_cp = -nu).
Complex response_denominator(const params::PhysicalParams& p, double nu,
                             double delta_k) {
    const double delta_cp = -nu;
    const Complex sigma = self_energy(p, delta_cp + p.delta1, delta_cp + p.delta2,
                                      params::kProbeKerrFactor * delta_k);
    return Complex{p.kappa_c(), delta_cp} + sigma;
}

}  // namespace

Complex self_energy(const params::PhysicalParams& p, double delta_1p,
                    double delta_2p, double delta_k_diag) {
    p.validate();
    return p.g1 * p.g1 / Complex{p.gamma1, delta_1p + delta_k_diag}
           + p.g2 * p.g2 / Complex{p.gamma2, delta_2p};
}

Complex s_parameter(const params::PhysicalParams& p, double nu, double delta_k) {
    return 2.0 * (p.kappa1 + p.kappa2) / response_denominator(p, nu, delta_k) - 1.0;
}

double cpa_input_ratio(const params::PhysicalParams& p) {
    return std::sqrt(p.kappa2 / p.kappa1);
}

PortOutputs port_outputs(const params::PhysicalParams& p, double nu,
                         double delta_k, Complex a1_in, Complex a2_in) {
    const double r1 = std::sqrt(2.0 * p.kappa1);
    const double r2 = std::sqrt(2.0 * p.kappa2);
    const Complex a = (r1 * a1_in + r2 * a2_in) / response_denominator(p, nu, delta_k);
    return {r1 * a - a1_in, r2 * a - a2_in};
}

Window default_window(const params::PhysicalParams& p) {
    const double center = params::omega_ep3(p.eta(), 0.0);
    return {center - kDefaultWindowHalfWidth, center + kDefaultWindowHalfWidth};
}

SpectrumTrace scan(const params::PhysicalParams& p, double delta_k,
                   Window window, int n_points) {
    p.validate();
    if (!(window.lo < window.hi)) {
        throw ValidationError("invalid scan window: need lo < hi");
    }
    if (n_points < 2) {
        throw ValidationError("scan needs at least 2 grid points");
    }

    SpectrumTrace t;
    t.source = p;
    t.delta_k = delta_k;
    t.nu.resize(n_points);
    t.s_abs2.resize(n_points);
    const double span = window.hi - window.lo;
    for (int i = 0; i < n_points; ++i) {
        const double nu = window.lo + span * (static_cast<double>(i) / (n_points - 1));
        t.nu[i] = nu;
        t.s_abs2[i] = std::norm(s_parameter(p, nu, delta_k));
    }
    return t;
}

double golden_section_minimize(const std::function<double(double)>& f,
                               double a, double b, double xtol) {
    constexpr double inv_phi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > xtol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

DipReport find_dips(const SpectrumTrace& trace, double prominence_ratio) {
    const auto& y = trace.s_abs2;
    const auto& x = trace.nu;
    const auto n = static_cast<int>(y.size());
    if (n < 3) throw ValidationError("trace too short for dip extraction");

    const auto s_abs2_of = [&trace](double nu) {
        return std::norm(s_parameter(trace.source, nu, trace.delta_k));
    };

    struct Dip {
        double pos;
        double depth;
    };
    std::vector<Dip> dips;

    for (int i = 1; i + 1 < n; ++i) {
        if (!(y[i] < y[i - 1] && y[i] < y[i + 1])) continue;

        // Flanking maxima: nearest sampled local maximum on each side, with
        // the trace edges acting as maxima when none occurs before them.
        double left_max = y[0];
        for (int j = i - 1; j > 0; --j) {
            if (y[j] > y[j - 1] && y[j] > y[j + 1]) {
                left_max = y[j];
                break;
            }
        }
        double right_max = y[n - 1];
        for (int j = i + 1; j + 1 < n; ++j) {
            if (y[j] > y[j - 1] && y[j] > y[j + 1]) {
                right_max = y[j];
                break;
            }
        }

        const double pos = golden_section_minimize(s_abs2_of, x[i - 1], x[i + 1], 1e-8);
        const double depth = s_abs2_of(pos);
        if (depth < prominence_ratio * std::min(left_max, right_max)) {
            dips.push_back({pos, depth});
        }
    }

    if (dips.size() != 2) {
        throw DipCountMismatch(
            "expected exactly 2 qualifying dips, found "
                + std::to_string(dips.size())
                + " (too far from the EP3 regime, or trace under-resolved)",
            static_cast<int>(dips.size()));
    }

    std::sort(dips.begin(), dips.end(),
              [](const Dip& a, const Dip& b) { return a.pos < b.pos; });

    DipReport r;
    r.dip1 = dips[0].pos;
    r.dip2 = dips[1].pos;
    r.depth1 = dips[0].depth;
    r.depth2 = dips[1].depth;
    r.delta_omega_p = r.dip2 - r.dip1;
    r.dip_count = 2;
    if (trace.delta_k > 0.0) {
        r.enhancement = r.delta_omega_p / trace.delta_k;
    }
    return r;
}

std::vector<EnhancementRow> enhancement_curve(const std::vector<double>& eta_list,
                                              const std::vector<double>& xi_list,
                                              double kappa_int, double port_split,
                                              int n_points) {
    std::vector<EnhancementRow> rows;
    rows.reserve(eta_list.size() * xi_list.size());
    for (const double eta : eta_list) {
        params::PseudoHermitianConfig cfg;
        cfg.eta = eta;
        cfg.g1 = params::g_ep3(eta);
        const auto base = params::derive_pseudo_hermitian(cfg, kappa_int, port_split);
        const Window w = default_window(base);
        for (const double xi : xi_list) {
            const double delta_k = xi * base.gamma2;
            const auto trace = scan(base.with_delta_k(delta_k), delta_k, w, n_points);
            try {
                const auto dips = find_dips(trace);
                rows.push_back({eta, xi, dips.delta_omega_p,
                                dips.delta_omega_p / delta_k});
            } catch (const DipCountMismatch& e) {
                throw DipCountMismatch("enhancement_curve at eta="
                                           + std::to_string(eta) + ", xi="
                                           + std::to_string(xi) + ": " + e.what(),
                                       e.count);
            }
        }
    }
    return rows;
}

}  // namespace ep3sim::scattering
