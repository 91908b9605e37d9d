#include "wreath/enumeration.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <set>

using namespace wreath;

namespace {

// Subset count from scratch: C(nm, k) masks, keep those with <= r per block.
BigInt oracle_subsets(int m, int n, int r, int k) {
    BigInt count = 0;
    const int length = m * n;
    for (std::uint32_t mask = 0; mask < (1u << length); ++mask) {
        if (std::popcount(mask) != k) continue;
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) ok = std::popcount((mask >> (b * m)) & ((1u << m) - 1)) <= r;
        count += ok;
    }
    return count;
}

// Distribute k errors over n labelled blocks directly (no partitions).
BigInt oracle_compositions(int m, int n, int r, int k) {
    if (n == 0) return k == 0 ? 1 : 0;
    BigInt total = 0;
    for (int l = 0; l <= std::min(r, k); ++l) total += binomial(m, l) * oracle_compositions(m, n - 1, r, k - l);
    return total;
}

Rational pow_q(Rational q, int e) {
    Rational out = 1;
    while (e-- > 0) out *= q;
    return out;
}

std::multiset<std::vector<int>> as_parts(const std::vector<Partition>& ps) {
    std::multiset<std::vector<int>> out;
    for (const auto& p : ps) {
        std::vector<int> parts;
        for (int i = static_cast<int>(p.freq.size()); i >= 1; --i)
            for (int f = 0; f < p.freq[i - 1]; ++f) parts.push_back(i);
        out.insert(parts);
    }
    return out;
}

}  // namespace

TEST(Partitions, Examples) {
    EXPECT_EQ(as_parts(partitions_bounded(2, 2, 1)), (std::multiset<std::vector<int>>{{1, 1}}));
    EXPECT_EQ(as_parts(partitions_bounded(3, 3, 2)), (std::multiset<std::vector<int>>{{2, 1}, {1, 1, 1}}));
    EXPECT_TRUE(partitions_bounded(5, 2, 2).empty());
    EXPECT_EQ(partitions_bounded(0, 3, 2).size(), 1u);
}

TEST(Partitions, InvariantsAndUniqueness) {
    for (int n = 0; n <= 6; ++n)
        for (int r = 0; r <= 4; ++r)
            for (int k = 0; k <= n * r + 2; ++k) {
                const auto ps = partitions_bounded(k, n, r);
                const auto parts = as_parts(ps);
                EXPECT_EQ(std::set<std::vector<int>>(parts.begin(), parts.end()).size(), ps.size());
                for (const auto& p : ps) {
                    EXPECT_EQ(p.total(), k);
                    EXPECT_LE(p.parts(), n);
                    EXPECT_LE(static_cast<int>(p.freq.size()), std::max(r, 0));
                    EXPECT_EQ(p.parts_below(1), 0);
                    for (int i = 2; i <= r; ++i) EXPECT_GE(p.parts_below(i), p.parts_below(i - 1));
                }
            }
}

TEST(Counts, Examples) {
    EXPECT_EQ(count_partition_formula(3, 2, 1, 0), 1);
    EXPECT_EQ(count_partition_formula(3, 2, 1, 2), 9);
    EXPECT_EQ(count_partition_formula(3, 2, 1, 3), 0);
    EXPECT_EQ(count_recurrence(3, 2, 1, 1), 6);
    EXPECT_EQ(count_recurrence(2, 1, 0, 0), 1);
    EXPECT_EQ(count_recurrence(2, 1, 0, 1), 0);
    EXPECT_EQ(count_genfunc(3, 2, 1), (CountPolynomial{1, 6, 9}));
}

TEST(Counts, ThreeWayAgreement) {
    for (int m = 2; m <= 6; ++m)
        for (int n = 1; n <= 5; ++n)
            for (int r = 0; r <= m; ++r) {
                const auto poly = count_genfunc(m, n, r);
                const RecurrenceTable table(m, n, r, n * m);
                for (int k = 0; k <= n * m; ++k) {
                    const BigInt g = k < static_cast<int>(poly.size()) ? poly[k] : BigInt(0);
                    ASSERT_EQ(count_partition_formula(m, n, r, k), g) << m << n << r << k;
                    ASSERT_EQ(table.at(n, k), g);
                    ASSERT_EQ(oracle_compositions(m, n, r, k), g);
                }
            }
}

TEST(Counts, SpotCheckLarge) {
    const CodeParams p(9, 8);
    const auto poly = count_genfunc(p);
    for (int k : {0, 1, 5, 13, 20, 31, 32})
        EXPECT_EQ(count_partition_formula(p, k), poly[k]) << k;
    EXPECT_EQ(count_recurrence(p, 17), poly[17]);
    EXPECT_EQ(oracle_compositions(9, 8, 4, 17), poly[17]);
}

TEST(Counts, BruteForceMatchesSubsetOracle) {
    for (int m = 2; m <= 8; ++m)
        for (int n = 1; m * n <= 16; ++n)
            for (int r = 0; r <= m; r += std::max(1, m / 3))
                for (int k = 0; k <= m * n; ++k) {
                    const auto expect = oracle_subsets(m, n, r, k);
                    ASSERT_EQ(count_bruteforce(m, n, r, k), expect);
                    ASSERT_EQ(count_recurrence(m, n, r, k), expect);
                }
    EXPECT_THROW(count_bruteforce(5, 4, 2, 3), RefusalError);
}

TEST(Counts, MassAndDegenerateIdentities) {
    for (int m = 2; m <= 7; ++m)
        for (int n = 1; n <= 6; ++n) {
            const CodeParams p(m, n);
            const auto poly = count_genfunc(p);
            BigInt mass = 0;
            for (const auto& c : poly) mass += c;
            BigInt f1 = 0;
            for (const auto& c : truncated_binomial(m, p.r())) f1 += c;
            BigInt f1n = 1;
            for (int i = 0; i < n; ++i) f1n *= f1;
            EXPECT_EQ(mass, f1n);
            const auto full = count_genfunc(m, n, m);
            for (int k = 0; k <= m * n; ++k) EXPECT_EQ(full[k], binomial(m * n, k));
        }
    EXPECT_EQ(count_genfunc(CodeParams(5, 4)).size(), 9u);
    BigInt mass54 = 0;
    for (const auto& c : count_genfunc(CodeParams(5, 4))) mass54 += c;
    EXPECT_EQ(mass54, 65536);
}

TEST(Counts, MonotoneInTruncation) {
    for (int m = 2; m <= 6; ++m)
        for (int n = 1; n <= 4; ++n)
            for (int r = 0; r < m; ++r) {
                const auto lo = count_genfunc(m, n, r), hi = count_genfunc(m, n, r + 1);
                for (std::size_t k = 0; k < lo.size(); ++k) EXPECT_LE(lo[k], hi[k]);
            }
}

TEST(TruncatedBinomial, Examples) {
    EXPECT_EQ(truncated_binomial(5, 2), (CountPolynomial{1, 5, 10}));
    EXPECT_EQ(truncated_binomial(5, 5), (CountPolynomial{1, 5, 10, 10, 5, 1}));
    EXPECT_EQ(truncated_binomial(8, 3), (CountPolynomial{1, 8, 28, 56}));
    EXPECT_THROW(truncated_binomial(3, 4), std::invalid_argument);
}

TEST(Probabilities, ExactK) {
    EXPECT_EQ(prob_exact_k(CodeParams(3, 2), 2), Rational(3, 5));
    EXPECT_EQ(prob_exact_k(CodeParams(3, 2), 1), Rational(1));
    EXPECT_EQ(prob_exact_k(CodeParams(7, 3), 0), Rational(1));
    EXPECT_EQ(prob_exact_k(CodeParams(5, 8), 17), Rational(0));
    EXPECT_THROW(prob_exact_k(CodeParams(3, 2), 7), std::invalid_argument);
    EXPECT_THROW(prob_exact_k(CodeParams(3, 2), -1), std::invalid_argument);
}

TEST(Probabilities, ChannelForms) {
    EXPECT_EQ(prob_channel(CodeParams(5, 4), Rational(0)), Rational(1));
    EXPECT_EQ(prob_channel(CodeParams(5, 4), Rational(1)), Rational(0));
    const Rational p(2, 7);
    EXPECT_EQ(prob_channel(CodeParams(2, 1), p), pow_q(1 - p, 2));
    EXPECT_THROW(prob_channel(CodeParams(2, 1), Rational(3, 2)), std::invalid_argument);

    for (const Rational& q : {Rational(1, 10), Rational(1, 4), Rational(1, 3), Rational(5, 9)})
        for (int m = 2; m <= 7; ++m)
            for (int n = 1; n <= 5; ++n) {
                const CodeParams params(m, n);
                const Rational closed = prob_channel(params, q);
                EXPECT_EQ(closed, prob_channel_genfunc_form(params, q));
                EXPECT_EQ(closed, prob_channel_mixture_form(params, q));
                // Direct sum over block error counts, independent of the library.
                Rational block = 0;
                for (int l = 0; l <= params.r(); ++l)
                    block += Rational(binomial(m, l)) * pow_q(q, l) * pow_q(1 - q, m - l);
                EXPECT_EQ(closed, pow_q(block, n));
                EXPECT_NEAR(prob_channel(params, to_double(q)), to_double(closed), 1e-14);
            }
}

TEST(Rationals, ParseAndFormat) {
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("1/3"), Rational(1, 3));
    EXPECT_EQ(parse_rational("2.5e-1"), Rational(1, 4));
    EXPECT_EQ(parse_rational("1"), Rational(1));
    EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_EQ(format_fraction(Rational(6, 15)), "2/5");
    EXPECT_EQ(format_fraction(Rational(1)), "1/1");
    EXPECT_EQ(format_fraction(Rational(0)), "0/1");
}

TEST(Rationals, ToDoubleHandlesHugeOperands) {
    BigInt big = 1;
    for (int i = 0; i < 2000; ++i) big *= 3;
    EXPECT_DOUBLE_EQ(to_double(Rational(big, big * 4)), 0.25);
    EXPECT_DOUBLE_EQ(to_double(Rational(1, 3)), 1.0 / 3.0);
}
