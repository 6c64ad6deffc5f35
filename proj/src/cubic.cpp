#include "ep3sim/cubic.hpp"

#include <algorithm>
#include <cmath>

namespace ep3sim::cubic {

namespace {

Complex eval_monic(Complex z, Complex a, Complex b, Complex c) {
    return ((z + a) * z + b) * z + c;
}

// One Newton step, accepted only if it does not increase |f|.
Complex polish_monic(Complex z, Complex a, Complex b, Complex c) {
    const Complex f = eval_monic(z, a, b, c);
    const Complex df = (3.0 * z + 2.0 * a) * z + b;
    if (std::abs(df) == 0.0) return z;
    const Complex z1 = z - f / df;
    return std::abs(eval_monic(z1, a, b, c)) <= std::abs(f) ? z1 : z;
}

double eval_real(double x, double A, double B, double C) {
    return ((x + A) * x + B) * x + C;
}

double polish_real(double x, double A, double B, double C) {
    const double f = eval_real(x, A, B, C);
    const double df = (3.0 * x + 2.0 * A) * x + B;
    if (df == 0.0) return x;
    const double x1 = x - f / df;
    return std::abs(eval_real(x1, A, B, C)) <= std::abs(f) ? x1 : x;
}

}  // namespace

std::array<Complex, 3> solve_monic_complex(Complex a, Complex b, Complex c) {
    // Depress: z = w - a/3, w^3 + p w + q = 0.
    const Complex shift = a / 3.0;
    const Complex p = b - a * a / 3.0;
    const Complex q = c + a * (2.0 * a * a - 9.0 * b) / 27.0;

    // Scale that decides when p and q count as zero (triple root).
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), 1.0});
    const double tiny = 1e-300 * scale;

    std::array<Complex, 3> roots;
    const Complex inner = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    const Complex u3a = -q / 2.0 + inner;
    const Complex u3b = -q / 2.0 - inner;
    const Complex u3 = (std::abs(u3a) >= std::abs(u3b)) ? u3a : u3b;

    if (std::abs(u3) <= tiny) {
        // p = q = 0: triple root at -a/3.
        roots = {-shift, -shift, -shift};
    } else {
        const Complex u = std::pow(u3, 1.0 / 3.0);
        const Complex omega{-0.5, std::sqrt(3.0) / 2.0};
        const std::array<Complex, 3> us = {u, u * omega, u * std::conj(omega)};
        for (int k = 0; k < 3; ++k) {
            const Complex w = us[k] - p / (3.0 * us[k]);
            roots[k] = w - shift;
        }
    }

    for (auto& z : roots) z = polish_monic(z, a, b, c);
    return roots;
}

double discriminant_monic_real(double A, double B, double C) {
    return 18.0 * A * B * C - 4.0 * A * A * A * C + A * A * B * B
           - 4.0 * B * B * B - 27.0 * C * C;
}

RealCubicRoots solve_real(double c3, double c2, double c1, double c0) {
    RealCubicRoots out;

    const double lead_scale =
        std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
    if (lead_scale == 0.0) {
        out.degree = 0;  // identically zero: report no roots
        return out;
    }

    if (std::abs(c3) <= 1e-14 * lead_scale) {
        if (std::abs(c2) <= 1e-14 * lead_scale) {
            out.degree = (std::abs(c1) <= 1e-14 * lead_scale) ? 0 : 1;
            if (out.degree == 1) out.roots.push_back(-c0 / c1);
            return out;
        }
        out.degree = 2;
        const double disc = c1 * c1 - 4.0 * c2 * c0;
        if (disc >= 0.0) {
            const double s = std::sqrt(disc);
            // Citardauq form for the smaller-magnitude root.
            const double r1 = (-c1 - std::copysign(s, c1)) / (2.0 * c2);
            const double r2 = (std::abs(r1) > 0.0) ? c0 / (c2 * r1) : -c1 / (2.0 * c2);
            out.roots = {r1, r2};
            std::sort(out.roots.begin(), out.roots.end());
        }
        return out;
    }

    const double A = c2 / c3;
    const double B = c1 / c3;
    const double C = c0 / c3;
    out.discriminant = discriminant_monic_real(A, B, C);

    const double p = B - A * A / 3.0;
    const double q = C + A * (2.0 * A * A - 9.0 * B) / 27.0;
    const double shift = A / 3.0;

    const double pq_scale = std::max({std::abs(A), std::abs(B), std::abs(C), 1.0});
    if (std::abs(p) <= 1e-300 * pq_scale && std::abs(q) <= 1e-300 * pq_scale) {
        out.roots = {-shift, -shift, -shift};
        return out;
    }

    if (out.discriminant >= 0.0 && p < 0.0) {
        // Three real roots (possibly repeated): trigonometric form.
        const double m = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (p * m);  // = (3q/2p)*sqrt(-3/p)
        arg = std::clamp(arg, -1.0, 1.0);
        const double phi = std::acos(arg);
        for (int k = 0; k < 3; ++k) {
            const double t = m * std::cos((phi - 2.0 * kPi * k) / 3.0);
            out.roots.push_back(polish_real(t - shift, A, B, C));
        }
    } else {
        // One real root: Cardano with a cancellation-safe cube-root pick.
        const double inner = std::sqrt(std::max(0.0, q * q / 4.0 + p * p * p / 27.0));
        const double u3 = (q >= 0.0) ? (-q / 2.0 - inner) : (-q / 2.0 + inner);
        const double u = std::cbrt(u3);
        const double v = (u != 0.0) ? -p / (3.0 * u) : 0.0;
        out.roots.push_back(polish_real(u + v - shift, A, B, C));
    }

    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

}  // namespace ep3sim::cubic
