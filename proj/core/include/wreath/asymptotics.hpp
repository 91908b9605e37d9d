#pragma once

// Leading-order asymptotics for the pattern counts and success probabilities.
//
// Saddle point (n -> infinity, m fixed):
//   E(k) ~ F(zeta)^n / (zeta^(k+1) sqrt(2 pi n xi)),
// where zeta solves zeta F'(zeta)/F(zeta) = k/n and
// xi = (log F)''(zeta) + (k/n)/zeta^2.
//
// Uniform erfc form (m -> infinity, beta = r/m fixed):
//   F(x) ~ (1+x)^m [ erfc(sqrt(m) rho)/2 + A exp(-m rho^2)/sqrt(2 pi m) ],
// with rho^2 = log(1+x) - beta log x - h(beta), h the binary entropy, and rho
// taking the sign of x - beta/(1-beta).

#include "wreath/perm_code.hpp"

#include <stdexcept>

namespace wreath {

/// Saddle-point data for one (m, r, lambda).
struct SaddleData {
    double lambda = 0.0;
    double zeta = 0.0;
    double xi = 0.0;
    double residual = 0.0;  // zeta F'/F - lambda at the returned zeta
    double log_estimate = 0.0;
    double estimate = 0.0;  // exp(log_estimate); may overflow to +inf
};

/// Admissible window for lambda = k/n as fractions of r.
inline constexpr double kLambdaMinFraction = 0.02;
inline constexpr double kLambdaMaxFraction = 0.98;

bool lambda_admissible(int r, double lambda);

/// g(zeta) = zeta F'(zeta)/F(zeta) for F = F_{m,r}.
double saddle_function(int m, int r, double zeta);

/// Root of g(zeta) = lambda; throws std::domain_error outside the window.
/// The returned data has no estimate filled in.
SaddleData solve_saddle(int m, int r, double lambda);
SaddleData solve_saddle(const CodeParams& params, double lambda);

/// Saddle estimate of E_{n,m,r}(k), computed in log space.
SaddleData asym_count(int m, int n, int r, int k);
SaddleData asym_count(const CodeParams& params, int k);

/// Ratio of the saddle estimates of E_{n,m,r}(k) and of C(nm, k), the latter
/// being the same estimate with r = m.
double asym_prob_k(const CodeParams& params, int k);

/// Whether k lies in the admissible saddle window for params.
bool asym_prob_k_admissible(const CodeParams& params, int k);

/// Binary entropy -b log b - (1-b) log(1-b) in nats.
double binary_entropy(double beta);

struct UniformData {
    double beta = 0.0;
    double x = 0.0;
    double rho = 0.0;
    double a_coeff = 0.0;
    double entropy = 0.0;
    double bracket = 0.0;       // erfc(sqrt(m) rho)/2 + A exp(-m rho^2)/sqrt(2 pi m)
    double log_estimate_F = 0.0;  // m log(1+x) + log(bracket); -inf when bracket <= 0
    double estimate_F = 0.0;
};

/// Radicand log(1+x) - beta log x - h(beta), accurate near its double zero.
double uniform_radicand(double beta, double x);
/// Signed root: sign(x - beta/(1-beta)) sqrt(max(radicand, 0)).
double uniform_rho(double beta, double x);
/// The amplitude A(beta, x), continuous across x = beta/(1-beta).
double uniform_amplitude(double beta, double x);

/// Relative half-width around beta/(1-beta) inside which A switches to its
/// local expansion.
inline constexpr double kCoalescenceWindow = 1e-3;

UniformData uniform_F(int m, int r, double x);

/// Uniform estimate of P_{n,m,r}(p), bracket clamped to [0, 1] before the
/// n-th power.
double asym_prob_channel(const CodeParams& params, double p);

/// Trapezoidal rule for (1/2 pi i) contour integral of F(z)^n z^(-k-1) on a
/// circle of radius zeta (the saddle when k/n is admissible, else 1).
double coeff_via_contour(const CodeParams& params, int k, int quad_points);
double coeff_via_contour(int m, int n, int r, int k, int quad_points);

}  // namespace wreath
