#pragma once

// Arbitrary-precision reference values, independent of the library code.

namespace oracle {

/// Working precision in bits (about 120 decimal digits).
inline constexpr long kPrecisionBits = 400;

/// sum_n (-1)^n (x/2)^{2n} / (n! (order+1)_n), summed in kPrecisionBits
/// until the terms fall below 2^-kPrecisionBits of the largest term.
double normalized_bessel(double order, double x);

/// B_{alpha-1/2}(t) + t / (2 alpha + 1) B_{alpha+1/2}(t) at t = lambda x.
double hartley_bessel_kernel(double lambda, double x, double alpha);

}  // namespace oracle
