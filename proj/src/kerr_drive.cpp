#include "ep3sim/kerr_drive.hpp"

#include <algorithm>
#include <cmath>

#include "ep3sim/cubic.hpp"
#include "ep3sim/errors.hpp"

namespace ep3sim::kerr {

namespace {

struct Eliminated {
    Complex d;        // cavity denominator with magnon-2 folded in
    double p = 0.0;   // Re chi(0)
    double q = 0.0;   // Im chi (m-independent)
};

Eliminated eliminate(const params::PhysicalParams& p, const DriveConfig& drive) {
    Eliminated e;
    e.d = Complex{drive.delta_cd, -p.kappa_c()}
          - p.g2 * p.g2 / Complex{drive.delta_2d, -p.gamma2};
    const Complex pull = p.g1 * p.g1 / e.d;
    e.p = drive.delta_1d - pull.real();
    e.q = -p.gamma1 - pull.imag();
    return e;
}

Complex chi_at(const Eliminated& e, double k1, double m) {
    return Complex{e.p + 2.0 * k1 * m, e.q};
}

SteadyStateBranch make_branch(const params::PhysicalParams& p,
                              const DriveConfig& drive, const Eliminated& e,
                              double m) {
    SteadyStateBranch b;
    b.m = m;
    b.delta_k = 2.0 * drive.kerr_k1 * m;
    b.b1 = -drive.omega_d_rabi / chi_at(e, drive.kerr_k1, m);
    b.a = -p.g1 * b.b1 / e.d;
    b.b2 = -p.g2 * b.a / Complex{drive.delta_2d, -p.gamma2};
    return b;
}

}  // namespace

void DriveConfig::validate() const {
    if (!(kerr_k1 >= 0.0)) throw ValidationError("kerr_k1 must be >= 0 (K1 > 0, K2 = 0)");
    if (!(omega_d_rabi >= 0.0)) throw ValidationError("omega_d_rabi must be >= 0");
}

SteadyStateResult steady_state(const params::PhysicalParams& p,
                               const DriveConfig& drive) {
    p.validate();
    drive.validate();
    const Eliminated e = eliminate(p, drive);

    SteadyStateResult out;
    if (drive.omega_d_rabi == 0.0) {
        out.branches.push_back(make_branch(p, drive, e, 0.0));
        return out;
    }

    const double k1 = drive.kerr_k1;
    const double rhs = drive.omega_d_rabi * drive.omega_d_rabi;
    // m ((P + 2 K1 m)^2 + Q^2) = Omega_d^2
    const auto roots = cubic::solve_real(4.0 * k1 * k1, 4.0 * k1 * e.p,
                                         e.p * e.p + e.q * e.q, -rhs);
    out.cubic_discriminant = roots.discriminant;
    for (const double m : roots.roots) {
        if (m >= -1e-12) out.branches.push_back(make_branch(p, drive, e, std::max(m, 0.0)));
    }
    std::sort(out.branches.begin(), out.branches.end(),
              [](const SteadyStateBranch& a, const SteadyStateBranch& b) {
                  return a.m < b.m;
              });
    out.multistable = out.branches.size() > 1;
    return out;
}

double branch_residual(const params::PhysicalParams& p, const DriveConfig& drive,
                       const SteadyStateBranch& b) {
    const double dk = 2.0 * drive.kerr_k1 * std::norm(b.b1);
    const Complex r_a = Complex{drive.delta_cd, -p.kappa_c()} * b.a
                        + p.g1 * b.b1 + p.g2 * b.b2;
    const Complex r_b1 = Complex{drive.delta_1d + dk, -p.gamma1} * b.b1
                         + p.g1 * b.a + drive.omega_d_rabi;
    const Complex r_b2 = Complex{drive.delta_2d, -p.gamma2} * b.b2 + p.g2 * b.a;
    const double scale = std::max({1.0, std::abs(b.a), std::abs(b.b1), std::abs(b.b2)});
    return std::max({std::abs(r_a), std::abs(r_b1), std::abs(r_b2)}) / scale;
}

double drive_for_target_shift(const params::PhysicalParams& p,
                              const DriveConfig& drive_template,
                              double target_delta_k) {
    p.validate();
    drive_template.validate();
    if (!(drive_template.kerr_k1 > 0.0)) {
        throw ValidationError("drive_for_target_shift requires kerr_k1 > 0");
    }
    if (target_delta_k < 0.0) {
        throw ValidationError("target_delta_k must be >= 0");
    }
    const Eliminated e = eliminate(p, drive_template);
    const double m = target_delta_k / (2.0 * drive_template.kerr_k1);
    return std::sqrt(m) * std::abs(chi_at(e, drive_template.kerr_k1, m));
}

}  // namespace ep3sim::kerr
