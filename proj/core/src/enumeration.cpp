#include "wreath/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>

namespace wreath {

namespace mp = boost::multiprecision;

namespace {

// Numerator and denominator stay coprime under powers.
Rational rational_pow(const Rational& q, unsigned e) {
    return Rational(mp::pow(mp::numerator(q), e), mp::pow(mp::denominator(q), e));
}

}  // namespace

int Partition::parts() const {
    int total_parts = 0;
    for (int f : freq) total_parts += f;
    return total_parts;
}

int Partition::total() const {
    int sum = 0;
    for (std::size_t i = 0; i < freq.size(); ++i) sum += static_cast<int>(i + 1) * freq[i];
    return sum;
}

int Partition::parts_below(int i) const {
    int c = 0;
    for (int j = 1; j < i && j <= static_cast<int>(freq.size()); ++j) c += freq[j - 1];
    return c;
}

namespace {

void partitions_rec(int remaining, int max_part, int parts_left, Partition& current,
                    const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(current);
        return;
    }
    if (parts_left == 0) return;
    // Largest part first; the rest must fit in parts_left - 1 parts of size <= part.
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
        if (static_cast<long>(part) * parts_left < remaining) break;
        ++current.freq[part - 1];
        partitions_rec(remaining - part, part, parts_left - 1, current, visit);
        --current.freq[part - 1];
    }
}

}  // namespace

void for_each_partition(int k, int n, int r, const std::function<void(const Partition&)>& visit) {
    if (k < 0 || n < 0 || r < 0) throw std::invalid_argument("partition bounds must be nonnegative");
    Partition current{std::vector<int>(r, 0)};
    if (static_cast<long>(n) * r < k) return;
    partitions_rec(k, r, n, current, visit);
}

std::vector<Partition> partitions_bounded(int k, int n, int r) {
    std::vector<Partition> out;
    for_each_partition(k, n, r, [&](const Partition& p) { out.push_back(p); });
    return out;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

BigInt count_partition_formula(int m, int n, int r, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    std::vector<BigInt> block_choices(r + 1);
    for (int i = 0; i <= r; ++i) block_choices[i] = binomial(m, i);
    BigInt total = 0;
    for_each_partition(k, n, r, [&](const Partition& p) {
        BigInt term = 1;
        int smaller = 0;  // c_i: parts of size < i
        for (int i = 1; i <= r; ++i) {
            const int f = p.freq[i - 1];
            if (f > 0) term *= binomial(n - smaller, f) * mp::pow(block_choices[i], f);
            smaller += f;
        }
        total += term;
    });
    return total;
}

BigInt count_partition_formula(const CodeParams& params, int k) {
    return count_partition_formula(params.m(), params.n(), params.r(), k);
}

RecurrenceTable::RecurrenceTable(int m, int n, int r, int k_max) : n_(n), k_max_(k_max) {
    if (n < 0 || k_max < 0 || r < 0) throw std::invalid_argument("recurrence bounds must be nonnegative");
    std::vector<BigInt> choose(r + 1);
    for (int l = 0; l <= r; ++l) choose[l] = binomial(m, l);
    rows_.assign(n + 1, std::vector<BigInt>(k_max + 1, 0));
    rows_[0][0] = 1;
    for (int b = 1; b <= n; ++b) {
        for (int k = 0; k <= k_max; ++k) {
            BigInt sum = 0;
            for (int l = 0; l <= r && l <= k; ++l) sum += choose[l] * rows_[b - 1][k - l];
            rows_[b][k] = std::move(sum);
        }
    }
}

RecurrenceTable::RecurrenceTable(const CodeParams& params)
    : RecurrenceTable(params.m(), params.n(), params.r(), params.length()) {}

const BigInt& RecurrenceTable::at(int blocks, int k) const {
    if (blocks < 0 || blocks > n_ || k < 0 || k > k_max_) throw std::out_of_range("recurrence table index");
    return rows_[blocks][k];
}

BigInt count_recurrence(int m, int n, int r, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    return RecurrenceTable(m, n, r, k).at(n, k);
}

BigInt count_recurrence(const CodeParams& params, int k) {
    return count_recurrence(params.m(), params.n(), params.r(), k);
}

CountPolynomial truncated_binomial(int m, int r) {
    if (r < 0 || r > m) throw std::invalid_argument("truncation r must lie in [0, m]");
    CountPolynomial f(r + 1);
    for (int l = 0; l <= r; ++l) f[l] = binomial(m, l);
    return f;
}

CountPolynomial poly_multiply(const CountPolynomial& a, const CountPolynomial& b) {
    if (a.empty() || b.empty()) return {};
    CountPolynomial out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

CountPolynomial poly_power(const CountPolynomial& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative polynomial power");
    CountPolynomial result{1};
    CountPolynomial square = base;
    while (exponent > 0) {
        if (exponent & 1) result = poly_multiply(result, square);
        exponent >>= 1;
        if (exponent > 0) square = poly_multiply(square, square);
    }
    return result;
}

CountPolynomial count_genfunc(int m, int n, int r) {
    return poly_power(truncated_binomial(m, r), n);
}

CountPolynomial count_genfunc(const CodeParams& params) {
    return count_genfunc(params.m(), params.n(), params.r());
}

BigInt count_bruteforce(int m, int n, int r, int k) {
    const int length = m * n;
    if (length > kBruteForceMaxLength)
        throw RefusalError("exhaustive enumeration limited to n*m <= " + std::to_string(kBruteForceMaxLength));
    if (k < 0 || k > length) return 0;
    const std::uint32_t block_mask = (1u << m) - 1u;
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << length); ++mask) {
        if (std::popcount(mask) != k) continue;
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) ok = std::popcount((mask >> (b * m)) & block_mask) <= r;
        count += ok;
    }
    return BigInt(count);
}

Rational poly_evaluate(const CountPolynomial& poly, const Rational& x) {
    Rational acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

double poly_evaluate(const CountPolynomial& poly, double x) {
    double acc = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + it->convert_to<double>();
    return acc;
}

Rational prob_exact_k(const CodeParams& params, int k) {
    if (k < 0 || k > params.length()) throw std::invalid_argument("k must lie in [0, n*m]");
    if (k > params.n() * params.r()) return 0;
    return Rational(count_recurrence(params, k), binomial(params.length(), k));
}

namespace {

void check_probability(const Rational& p) {
    if (p < 0 || p > 1) throw std::invalid_argument("probability must lie in [0, 1]");
}

}  // namespace

Rational prob_channel(const CodeParams& params, const Rational& p) {
    check_probability(p);
    const int m = params.m();
    const Rational q = 1 - p;
    Rational block = 0;
    for (int l = 0; l <= params.r(); ++l) block += Rational(binomial(m, l)) * rational_pow(p, l) * rational_pow(q, m - l);
    return rational_pow(block, params.n());
}

double prob_channel(const CodeParams& params, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
    const int m = params.m();
    double block = 0.0;
    for (int l = 0; l <= params.r(); ++l)
        block += binomial(m, l).convert_to<double>() * std::pow(p, l) * std::pow(1.0 - p, m - l);
    return std::pow(block, params.n());
}

Rational prob_channel_genfunc_form(const CodeParams& params, const Rational& p) {
    check_probability(p);
    if (p == 1) throw std::invalid_argument("generating-function form needs p < 1");
    const Rational q = 1 - p;
    return rational_pow(q, params.length()) * poly_evaluate(count_genfunc(params), p / q);
}

Rational prob_channel_mixture_form(const CodeParams& params, const Rational& p) {
    check_probability(p);
    const auto e = count_genfunc(params);
    const Rational q = 1 - p;
    Rational sum = 0;
    for (std::size_t k = 0; k < e.size(); ++k)
        sum += Rational(e[k]) * rational_pow(p, static_cast<unsigned>(k)) *
               rational_pow(q, static_cast<unsigned>(params.length() - static_cast<int>(k)));
    return sum;
}

Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("not an exact number: '" + std::string(text) + "'"); };
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const Rational num = parse_rational(text.substr(0, slash));
        const Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0) fail();
        return num / den;
    }

    bool negative = false;
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
    BigInt digits = 0;
    int scale = 0;
    bool any_digit = false, seen_point = false;
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch >= '0' && ch <= '9') {
            digits = digits * 10 + (ch - '0');
            any_digit = true;
            if (seen_point) ++scale;
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) fail();
    long exponent = 0;
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E') fail();
        ++pos;
        bool exp_negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) exp_negative = text[pos++] == '-';
        if (pos == text.size()) fail();
        for (; pos < text.size(); ++pos) {
            if (text[pos] < '0' || text[pos] > '9') fail();
            exponent = exponent * 10 + (text[pos] - '0');
            if (exponent > 100000) fail();
        }
        if (exp_negative) exponent = -exponent;
    }
    const long power = exponent - scale;
    Rational value(digits);
    const BigInt ten_pow = mp::pow(BigInt(10), static_cast<unsigned>(power < 0 ? -power : power));
    value = power < 0 ? value / Rational(ten_pow) : value * Rational(ten_pow);
    return negative ? Rational(-value) : value;
}

std::string format_fraction(const Rational& q) {
    return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

double to_double(const Rational& q) {
    BigInt num = mp::numerator(q);
    const BigInt den = mp::denominator(q);
    if (num == 0) return 0.0;
    const bool negative = num < 0;
    if (negative) num = -num;
    // Scale so the integer quotient carries at least 64 significant bits.
    const long shift = 64 + static_cast<long>(mp::msb(den)) - static_cast<long>(mp::msb(num));
    const BigInt quotient = shift >= 0 ? BigInt((num << shift) / den) : BigInt((num >> -shift) / den);
    const double value = std::ldexp(quotient.convert_to<double>(), static_cast<int>(-shift));
    return negative ? -value : value;
}

}  // namespace wreath
