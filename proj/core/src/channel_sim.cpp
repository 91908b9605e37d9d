#include "wreath/channel_sim.hpp"

#include "wreath/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace wreath {

void validate(const ErrorModel& model, const CodeParams& params) {
    if (const auto* fixed = std::get_if<FixedK>(&model)) {
        if (fixed->k < 0 || fixed->k > params.length())
            throw std::invalid_argument("fixed error count must lie in [0, n*m]");
    } else {
        const double p = std::get<IID>(model).p;
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("error probability must lie in [0, 1]");
    }
}

namespace {

int wrong_symbol(int correct, int length, std::mt19937_64& rng) {
    const int v = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(length) - 1));
    return v >= correct ? v + 1 : v;
}

}  // namespace

Word corrupt_positions(const Word& w, std::span<const int> positions, std::mt19937_64& rng) {
    std::vector<int> symbols(w.symbols().begin(), w.symbols().end());
    const int length = w.params().length();
    for (int pos : positions) {
        if (pos < 1 || pos > length) throw std::invalid_argument("error position out of range");
        symbols[pos - 1] = wrong_symbol(symbols[pos - 1], length, rng);
    }
    return Word(std::move(symbols), w.params());
}

Corruption corrupt(const Word& w, const ErrorModel& model, std::mt19937_64& rng) {
    const int length = w.params().length();
    validate(model, w.params());
    std::vector<int> positions;
    if (const auto* fixed = std::get_if<FixedK>(&model)) {
        // Partial Fisher-Yates: the first k slots form a uniform k-subset.
        std::vector<int> slots(length);
        for (int i = 0; i < length; ++i) slots[i] = i + 1;
        for (int i = 0; i < fixed->k; ++i) {
            const auto j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(length - i)));
            std::swap(slots[i], slots[j]);
        }
        positions.assign(slots.begin(), slots.begin() + fixed->k);
        std::sort(positions.begin(), positions.end());
    } else {
        const double p = std::get<IID>(model).p;
        for (int pos = 1; pos <= length; ++pos)
            if (uniform_unit(rng) < p) positions.push_back(pos);
    }
    Word out = corrupt_positions(w, positions, rng);
    return {std::move(out), std::move(positions)};
}

bool within_block_bound(const CodeParams& params, std::span<const int> positions) {
    std::vector<int> per_block(params.n(), 0);
    for (int pos : positions)
        if (++per_block[(pos - 1) / params.m()] > params.r()) return false;
    return true;
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::clamp(std::min(centre - half, phat), 0.0, 1.0), std::clamp(std::max(centre + half, phat), 0.0, 1.0)};
}

namespace {

void run_range(const CodeParams& params, const ErrorModel& model, std::uint64_t seed, std::uint64_t first,
               std::uint64_t last, TrialReport& out) {
    for (std::uint64_t t = first; t < last; ++t) {
        auto rng = trial_stream(seed, t);
        const GroupElement sent = random_element(params, rng);
        const auto received = corrupt(encode(sent, params), model, rng);
        const DecodeOutcome outcome = decode(received.word);
        const bool bounded = within_block_bound(params, received.positions);
        if (!outcome.ok()) {
            ++out.detected_failures;
            out.bound_violations += bounded;
        } else if (*outcome.element == sent) {
            ++out.successes;
            out.guaranteed_successes += bounded;
        } else {
            ++out.miscorrections;
            out.bound_violations += bounded;
            out.miscorrections_within_bound += bounded;
        }
    }
}

}  // namespace

TrialReport run_trials(const CodeParams& params, const ErrorModel& model, std::uint64_t trials,
                       std::uint64_t seed, int workers) {
    if (trials < 1) throw std::invalid_argument("at least one trial required");
    validate(model, params);
    workers = std::max(1, static_cast<int>(std::min<std::uint64_t>(workers, trials)));

    std::vector<TrialReport> partial(workers);
    auto bounds = [&](int w) { return trials * static_cast<std::uint64_t>(w) / workers; };
    if (workers == 1) {
        run_range(params, model, seed, 0, trials, partial[0]);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] { run_range(params, model, seed, bounds(w), bounds(w + 1), partial[w]); });
    }

    TrialReport report;
    report.trials = trials;
    for (const auto& p : partial) {
        report.successes += p.successes;
        report.detected_failures += p.detected_failures;
        report.miscorrections += p.miscorrections;
        report.bound_violations += p.bound_violations;
        report.miscorrections_within_bound += p.miscorrections_within_bound;
        report.guaranteed_successes += p.guaranteed_successes;
    }
    report.empirical_rate = static_cast<double>(report.guaranteed_successes) / static_cast<double>(trials);
    report.wilson = wilson_interval(report.guaranteed_successes, trials);
    return report;
}

PatternCheckReport exhaustive_pattern_check(const CodeParams& params, int fills, int codewords,
                                            std::uint64_t seed) {
    const int length = params.length();
    if (length > kExhaustiveMaxLength)
        throw RefusalError("exhaustive pattern check limited to n*m <= " + std::to_string(kExhaustiveMaxLength));
    if (fills < 1 || codewords < 1) throw std::invalid_argument("fills and codewords must be positive");

    const int max_k = params.n() * params.r();
    PatternCheckReport report;
    report.patterns_ok.assign(max_k + 1, 0);
    report.patterns_total.resize(max_k + 1);
    for (int k = 0; k <= max_k; ++k) report.patterns_total[k] = binomial(length, k);

    std::mt19937_64 rng(seed);
    std::vector<int> positions;
    for (std::uint32_t mask = 0; mask < (1u << length); ++mask) {
        const int k = std::popcount(mask);
        if (k > max_k) continue;
        positions.clear();
        for (int b = 0; b < length; ++b)
            if (mask >> b & 1u) positions.push_back(b + 1);

        bool all_ok = true;
        for (int c = 0; c < codewords && all_ok; ++c) {
            const GroupElement sent = random_element(params, rng);
            const Word word = encode(sent, params);
            for (int f = 0; f < fills && all_ok; ++f) {
                const auto outcome = decode(corrupt_positions(word, positions, rng));
                all_ok = outcome.ok() && *outcome.element == sent;
            }
        }
        if (all_ok) ++report.patterns_ok[k];
    }
    return report;
}

}  // namespace wreath
