#pragma once

// Exact counts of correctible error patterns.
//
// E(k) = E_{n,m,r}(k) is the number of k-subsets of the nm positions with at
// most r positions in every block. Three independent routes compute it: a sum
// over bounded integer partitions, a recurrence over the number of blocks, and
// the coefficients of F_{m,r}(x)^n with F_{m,r}(x) = sum_{l<=r} C(m,l) x^l.

#include "wreath/perm_code.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wreath {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Polynomial with big-integer coefficients, index = degree.
using CountPolynomial = std::vector<BigInt>;

/// A partition in frequency form: freq[i-1] = number of parts equal to i,
/// for part sizes 1..r.
struct Partition {
    std::vector<int> freq;

    int parts() const;
    int total() const;
    /// Number of parts strictly smaller than i (i >= 1).
    int parts_below(int i) const;
};

/// Visits every partition of k into at most n parts, each of size at most r.
/// Parts are generated as nonincreasing sequences, largest first.
void for_each_partition(int k, int n, int r, const std::function<void(const Partition&)>& visit);
std::vector<Partition> partitions_bounded(int k, int n, int r);

BigInt binomial(int n, int k);

/// Sum over partitions of prod_i C(n - c_i, f_i) C(m, i)^{f_i}.
BigInt count_partition_formula(const CodeParams& params, int k);
BigInt count_partition_formula(int m, int n, int r, int k);

/// Memoised table E_{n',m,r}(k') for n' <= n, k' <= k_max, filled by
/// E_{n'}(k) = sum_{l<=r} C(m,l) E_{n'-1}(k-l).
class RecurrenceTable {
public:
    RecurrenceTable(int m, int n, int r, int k_max);
    explicit RecurrenceTable(const CodeParams& params);

    const BigInt& at(int blocks, int k) const;
    int k_max() const noexcept { return k_max_; }

private:
    int n_;
    int k_max_;
    std::vector<std::vector<BigInt>> rows_;
};

BigInt count_recurrence(const CodeParams& params, int k);
BigInt count_recurrence(int m, int n, int r, int k);

/// Coefficients C(m, l) for l = 0..r.
CountPolynomial truncated_binomial(int m, int r);

/// F_{m,r}(x)^n, degree n*r.
CountPolynomial count_genfunc(const CodeParams& params);
CountPolynomial count_genfunc(int m, int n, int r);

/// Exhaustive count over all k-subsets of positions. Refuses nm > 16.
BigInt count_bruteforce(int m, int n, int r, int k);

inline constexpr int kBruteForceMaxLength = 16;

CountPolynomial poly_multiply(const CountPolynomial& a, const CountPolynomial& b);
CountPolynomial poly_power(const CountPolynomial& base, int exponent);
Rational poly_evaluate(const CountPolynomial& poly, const Rational& x);
double poly_evaluate(const CountPolynomial& poly, double x);

/// p(k) = E(k) / C(nm, k), reduced.
Rational prob_exact_k(const CodeParams& params, int k);

/// Closed form P(p) = (sum_{l<=r} C(m,l) p^l (1-p)^{m-l})^n.
Rational prob_channel(const CodeParams& params, const Rational& p);
/// Floating-point evaluation of the same closed form; the input is taken
/// as-is and the result is not exact.
double prob_channel(const CodeParams& params, double p);

/// (1-p)^{mn} * E(p/(1-p)) for p < 1; equal to prob_channel.
Rational prob_channel_genfunc_form(const CodeParams& params, const Rational& p);
/// sum_k E(k) p^k (1-p)^{nm-k}; equal to prob_channel.
Rational prob_channel_mixture_form(const CodeParams& params, const Rational& p);

/// Parses "0.25", "1/4", "1e-2" or "3" exactly. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "a/b" in lowest terms with b >= 1.
std::string format_fraction(const Rational& q);

double to_double(const Rational& q);

/// Thrown when a request exceeds an exhaustive-work size cap.
class RefusalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wreath
