#include "wreath/erfc.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace wreath {

namespace {

// exp(-x^2) with x split so that hi*hi is exact.
double exp_minus_square(double x) {
    const double hi = std::trunc(x * 0x1.0p20) * 0x1.0p-20;
    const double lo = x - hi;
    return std::exp(-hi * hi) * std::exp(-(2.0 * hi * lo + lo * lo));
}

constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;

}  // namespace

namespace detail {

double erfc_series(double x) {
    double term = x;
    double sum = x;
    for (int k = 1; k < 200 && term > 1e-17 * sum; ++k) {
        term *= 2.0 * x * x / (2 * k + 1);
        sum += term;
    }
    return 1.0 - 2.0 * kInvSqrtPi * exp_minus_square(x) * sum;
}

double erfc_continued_fraction(double x) {
    constexpr double tiny = 1e-300;
    double f = tiny, c = tiny, d = 0.0;
    double a = 1.0;
    for (int j = 1; j <= 2000; ++j) {
        d = x + a * d;
        if (d == 0.0) d = tiny;
        c = x + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        a = 0.5 * j;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return kInvSqrtPi * exp_minus_square(x) * f;
}

}  // namespace detail

double erfc(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) return 2.0 - erfc(-x);
    if (x < kErfcSwitch) return detail::erfc_series(x);
    // exp(-x^2) underflows past ~27.3; the fraction is then irrelevant.
    if (x > 27.5) return 0.0;
    return detail::erfc_continued_fraction(x);
}

}  // namespace wreath
