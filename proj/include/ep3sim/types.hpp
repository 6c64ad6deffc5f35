#pragma once

#include <complex>

// All frequencies and rates in this library are dimensionless multiples of
// the reference magnon decay rate gamma2.

namespace ep3sim {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace ep3sim
