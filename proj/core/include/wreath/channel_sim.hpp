#pragma once

// Monte Carlo transmission over a symbol-substitution channel.
//
// Every trial t of a run seeded with s draws from its own stream
// trial_stream(s, t), so counts do not depend on how trials are split across
// worker threads.

#include "wreath/enumeration.hpp"
#include "wreath/perm_code.hpp"

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

namespace wreath {

/// Exactly k positions, chosen uniformly among all k-subsets.
struct FixedK {
    int k;
};

/// Each position independently with probability p.
struct IID {
    double p;
};

/// Wrong symbols are uniform over the nm - 1 symbols that differ from the
/// transmitted one.
using ErrorModel = std::variant<FixedK, IID>;

void validate(const ErrorModel& model, const CodeParams& params);

struct Corruption {
    Word word;
    std::vector<int> positions;  // 1-based, increasing
};

Corruption corrupt(const Word& w, const ErrorModel& model, std::mt19937_64& rng);

/// Replaces each listed position (1-based) with a uniform wrong symbol.
Word corrupt_positions(const Word& w, std::span<const int> positions, std::mt19937_64& rng);

/// True when no block holds more than r of the positions.
bool within_block_bound(const CodeParams& params, std::span<const int> positions);

struct WilsonInterval {
    double lo;
    double hi;

    bool operator==(const WilsonInterval&) const = default;
};

inline constexpr double kZ99 = 2.5758293035489004;  // two-sided 99% normal quantile

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ99);

struct TrialReport {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t detected_failures = 0;
    std::uint64_t miscorrections = 0;
    // Failed or miscorrected trials whose pattern had <= r errors per block.
    std::uint64_t bound_violations = 0;
    // Miscorrected trials whose pattern had <= r errors per block.
    std::uint64_t miscorrections_within_bound = 0;
    // Correct decodes whose pattern had <= r errors per block: the event the
    // exact success probabilities count. The decoder also repairs many
    // heavier patterns, so `successes` runs above the exact value.
    std::uint64_t guaranteed_successes = 0;
    double empirical_rate = 0.0;  // guaranteed_successes / trials
    WilsonInterval wilson{0.0, 1.0};  // around empirical_rate

    bool operator==(const TrialReport&) const = default;
};

TrialReport run_trials(const CodeParams& params, const ErrorModel& model, std::uint64_t trials,
                       std::uint64_t seed, int workers = 1);

struct PatternCheckReport {
    std::vector<BigInt> patterns_ok;     // indexed by k = 0..n*r
    std::vector<BigInt> patterns_total;  // C(nm, k)
};

inline constexpr int kExhaustiveMaxLength = 16;

/// Runs every position subset of size <= n*r through the decoder with
/// `codewords` random codewords and `fills` random wrong-symbol fills each;
/// a pattern counts as correctible when every attempt decodes to the
/// transmitted element. Refuses nm > 16.
PatternCheckReport exhaustive_pattern_check(const CodeParams& params, int fills, int codewords = 1,
                                            std::uint64_t seed = 0);

}  // namespace wreath
