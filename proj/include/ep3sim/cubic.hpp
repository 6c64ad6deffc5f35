#pragma once

// Closed-form cubic solvers shared by the spectral and Kerr steady-state
// code paths. Both variants polish every root with one guarded Newton step
// on the original polynomial; near a triple root the raw closed form keeps
// only about a third of the significant digits.

#include <array>
#include <vector>

#include "ep3sim/types.hpp"

namespace ep3sim::cubic {

// Roots of the monic complex cubic z^3 + a z^2 + b z + c.
// Cube roots are taken on the principal branch; the Cardano intermediate is
// chosen to avoid cancellation between -q/2 and the inner square root.
std::array<Complex, 3> solve_monic_complex(Complex a, Complex b, Complex c);

// Discriminant of the monic real cubic x^3 + A x^2 + B x + C.
// Positive: three distinct real roots. Negative: one real root and a
// complex-conjugate pair. Zero: repeated roots.
double discriminant_monic_real(double A, double B, double C);

struct RealCubicRoots {
    std::vector<double> roots;   // real roots, ascending, with multiplicity
    double discriminant = 0.0;   // of the monic cubic (0 when degree < 3)
    int degree = 3;              // effective degree after leading-zero checks
};

// Real roots of c3 x^3 + c2 x^2 + c1 x + c0 = 0. Degrades to the quadratic /
// linear formula when leading coefficients vanish. Complex roots are dropped;
// they can only disappear as conjugate pairs, so a true cubic always reports
// 1 or 3 real roots counting multiplicity.
RealCubicRoots solve_real(double c3, double c2, double c1, double c0);

}  // namespace ep3sim::cubic
