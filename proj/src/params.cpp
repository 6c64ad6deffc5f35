#include "ep3sim/params.hpp"

#include <cmath>
#include <string>

#include "ep3sim/errors.hpp"

namespace ep3sim::params {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
}

}  // namespace

void PhysicalParams::validate() const {
    require(gamma1 > 0.0, "gamma1 must be > 0");
    require(gamma2 > 0.0, "gamma2 must be > 0");
    require(kappa_int > 0.0, "kappa_int must be > 0");
    require(kappa1 > 0.0, "kappa1 must be > 0");
    require(kappa2 > 0.0, "kappa2 must be > 0");
    require(g1 >= 0.0, "g1 must be >= 0");
    require(g2 >= 0.0, "g2 must be >= 0");
    require(delta_k >= 0.0, "delta_k must be >= 0 (K1 > 0)");
    require(std::isfinite(delta1) && std::isfinite(delta2),
            "detunings must be finite");
}

double PseudoHermitianConfig::k_ratio() const {
    return std::pow((1.0 + 2.0 * eta) / (2.0 * eta + eta * eta), 1.5);
}

void PseudoHermitianConfig::validate() const {
    require(eta > 0.0, "eta must be > 0");
    require(g1 > 0.0, "g1 must be > 0");
    require(delta1_sign == 1 || delta1_sign == -1, "delta1_sign must be +1 or -1");
    require(g1 >= g_min(eta) * (1.0 - 1e-12),
            "g1 below g_min(eta): Delta1^2 would be negative");
}

double g_min(double eta) {
    require(eta > 0.0, "eta must be > 0");
    const double k = std::pow((1.0 + 2.0 * eta) / (2.0 * eta + eta * eta), 1.5);
    return std::sqrt((1.0 + eta) * eta / (1.0 + eta * k * k));
}

double g_ep3(double eta) {
    require(eta > 0.0, "eta must be > 0");
    return 2.0 * eta * std::sqrt(eta * eta + 2.0 * eta) / (1.0 + 2.0 * eta);
}

double omega_ep3(double eta, double delta_cp) {
    require(eta > 0.0, "eta must be > 0");
    return delta_cp
           - std::sqrt(3.0) * (eta - 1.0) * eta / (2.0 * eta * eta + 5.0 * eta + 2.0);
}

std::array<Complex, 3> ep3_eigenvector(double eta) {
    require(eta > 0.0, "eta must be > 0");
    const double root3 = std::sqrt(3.0);
    const Complex c1{1.0, 0.0};
    const Complex c2 = -2.0 * std::sqrt(eta * eta + 2.0 * eta)
                       / Complex{root3, -(1.0 + 2.0 * eta)};
    const Complex c3 = 2.0 * std::sqrt(2.0 * eta + 1.0)
                       / Complex{root3 * eta, 2.0 + eta};
    const double norm = std::sqrt((2.0 * eta * eta + 5.0 * eta + 2.0)
                                  / (eta * eta + eta + 1.0));
    return {c1 / norm, c2 / norm, c3 / norm};
}

PhysicalParams derive_pseudo_hermitian(const PseudoHermitianConfig& config,
                                       double kappa_int, double port_split) {
    config.validate();
    require(kappa_int > 0.0, "kappa_int must be > 0");
    require(port_split > 0.0 && port_split < 1.0, "port_split must be in (0, 1)");

    const double eta = config.eta;
    const double k = config.k_ratio();

    const double radicand =
        (1.0 + eta * k * k) / ((1.0 + eta) * eta) * config.g1 * config.g1 - 1.0;
    require(radicand >= -1e-15,
            "g1 below g_min(eta): Delta1^2 would be negative");

    PhysicalParams p;
    p.gamma2 = 1.0;
    p.gamma1 = eta;
    p.kappa_int = kappa_int;
    const double kappa_ports = (1.0 + eta) + kappa_int;  // kappa_g + kappa_int
    p.kappa1 = port_split * kappa_ports;
    p.kappa2 = kappa_ports - p.kappa1;
    p.g1 = config.g1;
    p.g2 = k * config.g1;
    p.delta1 = config.delta1_sign * std::sqrt(std::max(0.0, radicand));
    p.delta2 = -eta * p.delta1;
    p.delta_k = 0.0;
    p.validate();
    return p;
}

bool is_pseudo_hermitian(const PhysicalParams& p, double tol) {
    if (p.g1 <= 0.0) return false;
    const double eta = p.eta();
    const double g2sq = p.gamma2 * p.gamma2;

    const auto close = [tol](double a, double b, double scale) {
        return std::abs(a - b) <= tol * std::max(std::abs(scale), 1.0);
    };

    const double k_expect = std::pow((1.0 + 2.0 * eta) / (2.0 * eta + eta * eta), 1.5);
    const double k = p.g2 / p.g1;
    const double d1sq_expect =
        (1.0 + eta * k * k) / ((1.0 + eta) * eta) * p.g1 * p.g1 - g2sq;

    return close(p.kappa_g(), (1.0 + eta) * p.gamma2, p.gamma2)
           && close(p.delta2, -eta * p.delta1, p.delta1)
           && close(p.delta1 * p.delta1, d1sq_expect, std::max(d1sq_expect, g2sq))
           && close(k, k_expect, k_expect);
}

}  // namespace ep3sim::params
