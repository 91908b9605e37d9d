#pragma once

namespace wreath {

/// Complementary error function erfc(x) = 2/sqrt(pi) * int_x^inf exp(-t^2) dt.
///
/// For 0 <= x < kErfcSwitch the nonalternating series
///   erf(x) = 2/sqrt(pi) exp(-x^2) sum_n 2^n x^(2n+1) / (1*3*...*(2n+1))
/// gives erfc = 1 - erf; above it the Laplace continued fraction
///   erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
/// is evaluated by modified Lentz. Negative x uses erfc(x) = 2 - erfc(-x).
/// Relative error stays below 1e-13 on [-10, 10].
double erfc(double x);

inline constexpr double kErfcSwitch = 1.5;

namespace detail {
double erfc_series(double x);
double erfc_continued_fraction(double x);
}  // namespace detail

}  // namespace wreath
