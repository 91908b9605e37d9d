#include "wreath/asymptotics.hpp"

#include "wreath/erfc.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace wreath {

namespace {

std::vector<double> binomial_row(int m, int r) {
    std::vector<double> a(r + 1);
    double c = 1.0;
    for (int l = 0; l <= r; ++l) {
        a[l] = c;
        c = c * (m - l) / (l + 1);
    }
    return a;
}

// Moments of l under the weights w_l = C(m,l) zeta^l. The mean is
// zeta F'/F and the variance is zeta^2 (log F)'' + zeta F'/F.
struct Tilted {
    double log_total;
    double mean;
    double variance;
};

Tilted tilt(const std::vector<double>& a, double zeta) {
    // Scale by the largest term to stay finite for large zeta.
    const double log_zeta = std::log(zeta);
    double log_max = -INFINITY;
    for (std::size_t l = 0; l < a.size(); ++l) log_max = std::max(log_max, std::log(a[l]) + l * log_zeta);
    double total = 0.0, first = 0.0;
    std::vector<double> w(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) {
        w[l] = std::exp(std::log(a[l]) + l * log_zeta - log_max);
        total += w[l];
        first += l * w[l];
    }
    const double mean = first / total;
    double var = 0.0;
    for (std::size_t l = 0; l < a.size(); ++l) var += (l - mean) * (l - mean) * w[l];
    return {log_max + std::log(total), mean, var / total};
}

void check_lambda(int r, double lambda) {
    if (!lambda_admissible(r, lambda))
        throw std::domain_error("lambda = " + std::to_string(lambda) + " outside the admissible window [" +
                                std::to_string(kLambdaMinFraction * r) + ", " +
                                std::to_string(kLambdaMaxFraction * r) + "]");
}

}  // namespace

bool lambda_admissible(int r, double lambda) {
    return r > 0 && lambda >= kLambdaMinFraction * r && lambda <= kLambdaMaxFraction * r;
}

double saddle_function(int m, int r, double zeta) {
    return tilt(binomial_row(m, r), zeta).mean;
}

SaddleData solve_saddle(int m, int r, double lambda) {
    if (r < 0 || r > m) throw std::invalid_argument("truncation r must lie in [0, m]");
    check_lambda(r, lambda);
    const auto a = binomial_row(m, r);
    auto g = [&](double z) { return tilt(a, z).mean; };

    double lo = 1e-12, hi = 1.0;
    while (g(hi) <= lambda) hi *= 2.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < lambda ? lo : hi) = mid;
    }
    double zeta = 0.5 * (lo + hi);

    // g'(zeta) = variance / zeta.
    for (int it = 0; it < 3; ++it) {
        const Tilted t = tilt(a, zeta);
        const double step = (t.mean - lambda) * zeta / t.variance;
        const double candidate = zeta - step;
        if (!(candidate > 0.0)) break;
        if (std::abs(g(candidate) - lambda) > std::abs(t.mean - lambda)) break;
        zeta = candidate;
    }

    const Tilted t = tilt(a, zeta);
    SaddleData out;
    out.lambda = lambda;
    out.zeta = zeta;
    out.residual = t.mean - lambda;
    // d^2/dz^2 [log F - lambda log z] at the root: variance / zeta^2.
    out.xi = t.variance / (zeta * zeta);
    return out;
}

SaddleData solve_saddle(const CodeParams& params, double lambda) {
    return solve_saddle(params.m(), params.r(), lambda);
}

SaddleData asym_count(int m, int n, int r, int k) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const double lambda = static_cast<double>(k) / n;
    SaddleData s = solve_saddle(m, r, lambda);
    const double log_f = tilt(binomial_row(m, r), s.zeta).log_total;
    s.log_estimate = n * log_f - (k + 1.0) * std::log(s.zeta) -
                     0.5 * std::log(2.0 * std::numbers::pi * n * s.xi);
    s.estimate = std::exp(s.log_estimate);
    return s;
}

SaddleData asym_count(const CodeParams& params, int k) {
    return asym_count(params.m(), params.n(), params.r(), k);
}

bool asym_prob_k_admissible(const CodeParams& params, int k) {
    const double lambda = static_cast<double>(k) / params.n();
    return lambda_admissible(params.r(), lambda) && lambda_admissible(params.m(), lambda);
}

double asym_prob_k(const CodeParams& params, int k) {
    const auto truncated = asym_count(params.m(), params.n(), params.r(), k);
    const auto full = asym_count(params.m(), params.n(), params.m(), k);
    return std::exp(truncated.log_estimate - full.log_estimate);
}

double binary_entropy(double beta) {
    if (!(beta > 0.0 && beta < 1.0)) throw std::domain_error("entropy needs 0 < beta < 1");
    return -beta * std::log(beta) - (1.0 - beta) * std::log1p(-beta);
}

namespace {

// log1p(y) - y without cancellation for small y.
double log1p_minus_x(double y) {
    if (std::abs(y) < 0.25) {
        double term = y, sum = 0.0;
        for (int k = 2; k < 80; ++k) {
            term *= -y;  // (-1)^(k+1) y^k
            const double add = term / k;
            sum += add;
            if (std::abs(add) <= 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    return std::log1p(y) - y;
}

void check_beta_x(double beta, double x) {
    if (!(beta > 0.0 && beta < 1.0)) throw std::domain_error("uniform expansion needs 0 < r/m < 1");
    if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("uniform expansion needs x > 0");
}

// Taylor coefficient of the radicand at the coalescence point, order k >= 2:
// R_k = (-1)^(k-1) (1-beta)^k (1 - beta^(1-k)) / k.
double radicand_coefficient(double beta, int k) {
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    return sign * std::pow(1.0 - beta, k) * (1.0 - std::pow(beta, 1 - k)) / k;
}

}  // namespace

double uniform_radicand(double beta, double x) {
    check_beta_x(beta, x);
    const double x0 = beta / (1.0 - beta);
    const double u = x - x0;
    // beta log(beta(1+x)/x) + (1-beta) log((1-beta)(1+x)), arguments written as
    // 1 + y with the O(u) parts of beta*y1 + (1-beta)*y2 cancelled exactly.
    const double y1 = -(1.0 - beta) * u / x;
    const double y2 = (1.0 - beta) * u;
    const double r = (1.0 - beta) * (1.0 - beta) * u * u / x + beta * log1p_minus_x(y1) +
                     (1.0 - beta) * log1p_minus_x(y2);
    return std::max(r, 0.0);
}

double uniform_rho(double beta, double x) {
    const double root = std::sqrt(uniform_radicand(beta, x));
    const double x0 = beta / (1.0 - beta);
    return x < x0 ? -root : root;
}

double uniform_amplitude(double beta, double x) {
    check_beta_x(beta, x);
    const double x0 = beta / (1.0 - beta);
    const double u = x - x0;
    const double scale = std::sqrt(beta * (1.0 - beta));
    if (std::abs(u) < kCoalescenceWindow * x0) {
        const double r2 = radicand_coefficient(beta, 2);
        const double a = radicand_coefficient(beta, 3) / r2;
        const double b = radicand_coefficient(beta, 4) / r2;
        const double c = radicand_coefficient(beta, 5) / r2;
        const double series = a / 2.0 + (b / 2.0 - 3.0 * a * a / 8.0) * u +
                              (c / 2.0 - 3.0 * a * b / 4.0 + 5.0 * a * a * a / 16.0) * u * u;
        return 1.0 / scale + series / std::sqrt(2.0 * r2);
    }
    const double rho = uniform_rho(beta, x);
    // 1 - beta/(x(1-beta)) = u/x.
    return x / (scale * u) - 1.0 / (std::numbers::sqrt2 * rho);
}

UniformData uniform_F(int m, int r, double x) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    UniformData d;
    d.beta = static_cast<double>(r) / m;
    d.x = x;
    check_beta_x(d.beta, x);
    d.entropy = binary_entropy(d.beta);
    d.rho = uniform_rho(d.beta, x);
    d.a_coeff = uniform_amplitude(d.beta, x);
    const double sm = std::sqrt(static_cast<double>(m));
    d.bracket = 0.5 * erfc(sm * d.rho) +
                d.a_coeff * std::exp(-m * d.rho * d.rho) / std::sqrt(2.0 * m * std::numbers::pi);
    d.log_estimate_F = d.bracket > 0.0 ? m * std::log1p(x) + std::log(d.bracket) : -INFINITY;
    d.estimate_F = std::exp(d.log_estimate_F);
    return d;
}

double asym_prob_channel(const CodeParams& params, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("asymptotic channel estimate needs 0 < p < 1");
    const auto d = uniform_F(params.m(), params.r(), p / (1.0 - p));
    const double bracket = std::clamp(d.bracket, 0.0, 1.0);
    return std::pow(bracket, params.n());
}

double coeff_via_contour(int m, int n, int r, int k, int quad_points) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (quad_points < 64) throw std::invalid_argument("at least 64 quadrature points required");
    const double lambda = static_cast<double>(k) / n;
    const double radius = lambda_admissible(r, lambda) ? solve_saddle(m, r, lambda).zeta : 1.0;
    const auto a = binomial_row(m, r);

    auto log_f = [&](std::complex<double> z) {
        std::complex<double> acc = 0.0;
        for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
        return std::log(acc);
    };
    // Normalise by the modulus at theta = 0, where |F(z)^n z^-k| peaks.
    const double log_peak = n * log_f(radius).real() - k * std::log(radius);
    double sum = 0.0;
    for (int j = 0; j < quad_points; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / quad_points;
        const std::complex<double> z = std::polar(radius, theta);
        const std::complex<double> expo = static_cast<double>(n) * log_f(z) -
                                          static_cast<double>(k) * std::complex<double>(std::log(radius), theta);
        sum += std::exp(expo - log_peak).real();
    }
    return std::exp(log_peak) * sum / quad_points;
}

double coeff_via_contour(const CodeParams& params, int k, int quad_points) {
    return coeff_via_contour(params.m(), params.n(), params.r(), k, quad_points);
}

}  // namespace wreath
