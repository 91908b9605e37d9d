#include "commands.hpp"

#include "wreath/asymptotics.hpp"
#include "wreath/channel_sim.hpp"
#include "wreath/enumeration.hpp"
#include "wreath/figures.hpp"
#include "wreath/perm_code.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wreath::cli {

namespace {

/// Argument errors that should name the offending flag.
class FlagError : public std::invalid_argument {
public:
    FlagError(const std::string& flag, const std::string& what) : std::invalid_argument(flag + ": " + what) {}
};

template <class F>
auto with_flag(const std::string& flag, F&& f) {
    try {
        return f();
    } catch (const RefusalError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FlagError(flag, e.what());
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string::npos ? text.size() : comma;
        if (end > start) out.push_back(text.substr(start, end - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

struct CodeFlags {
    int m = 0;
    int n = 0;

    void add(CLI::App& cmd) {
        cmd.add_option("--m", m, "block size m >= 2")->required();
        cmd.add_option("--n", n, "number of blocks n >= 1")->required();
    }
    CodeParams params() const {
        return with_flag("--m/--n", [&] { return CodeParams(m, n); });
    }
};

// encode ---------------------------------------------------------------------

struct EncodeCmd {
    CodeFlags code;
    std::string beta;
    std::string shifts;
    bool blocks = false;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("encode", "list form of a group element");
        code.add(*cmd);
        cmd->add_option("--beta", beta, "0-based block permutation, comma separated")->required();
        cmd->add_option("--shifts", shifts, "cyclic shift per block, comma separated")->required();
        cmd->add_flag("--blocks", blocks, "separate blocks with '|'");
    }

    int run(std::ostream& out) const {
        const auto params = code.params();
        GroupElement g{with_flag("--beta", [&] { return parse_int_list(beta); }),
                       with_flag("--shifts", [&] { return parse_int_list(shifts); })};
        with_flag("--beta/--shifts", [&] {
            validate(g, params);
            return 0;
        });
        out << format_word(encode(g, params), blocks) << '\n';
        return kOk;
    }
};

// decode ---------------------------------------------------------------------

struct DecodeCmd {
    CodeFlags code;
    std::string word;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("decode", "majority-logic decoding of a received word");
        code.add(*cmd);
        cmd->add_option("--word", word, "n*m comma-separated 1-based symbols; '|' ignored")->required();
    }

    int run(std::ostream& out) const {
        const auto params = code.params();
        const Word received = with_flag("--word", [&] { return parse_word(word, params); });
        const auto outcome = decode(received);
        out << "outcome=" << to_string(outcome.kind) << '\n';
        switch (outcome.kind) {
            case DecodeKind::Decoded: {
                const Word codeword = encode(*outcome.element, params);
                const auto errors = differing_positions(received, codeword);
                out << format_element(*outcome.element) << '\n'
                    << "codeword=" << format_word(codeword) << '\n'
                    << "errors=" << format_int_list(errors) << '\n'
                    << "error_count=" << errors.size() << '\n';
                break;
            }
            case DecodeKind::AmbiguousMajority:
                out << "block=" << outcome.block << '\n';
                break;
            case DecodeKind::InvalidReconstruction:
                out << "labels=" << format_int_list(outcome.labels) << '\n';
                break;
        }
        return kOk;
    }
};

// enumerate ------------------------------------------------------------------

struct EnumerateCmd {
    CodeFlags code;
    std::optional<int> k_min;
    std::optional<int> k_max;
    std::string method = "genfunc";

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("enumerate", "exact counts of correctible k-error patterns (CSV)");
        code.add(*cmd);
        cmd->add_option("--k-min", k_min, "first k (default 0)");
        cmd->add_option("--k-max", k_max, "last k (default n*m)");
        cmd->add_option("--method", method, "partition | recurrence | genfunc | brute")
            ->check(CLI::IsMember({"partition", "recurrence", "genfunc", "brute"}));
    }

    int run(std::ostream& out) const {
        const auto params = code.params();
        const int lo = k_min.value_or(0);
        const int hi = k_max.value_or(params.length());
        if (lo < 0 || lo > params.length()) throw FlagError("--k-min", "must lie in [0, n*m]");
        if (hi < lo || hi > params.length()) throw FlagError("--k-max", "must lie in [k-min, n*m]");
        if (method == "brute" && params.length() > kBruteForceMaxLength)
            throw RefusalError("--method brute: refused, n*m = " + std::to_string(params.length()) +
                               " exceeds the exhaustive limit " + std::to_string(kBruteForceMaxLength));

        std::vector<BigInt> counts;
        if (method == "genfunc") {
            const auto poly = count_genfunc(params);
            for (int k = lo; k <= hi; ++k) counts.push_back(k < static_cast<int>(poly.size()) ? poly[k] : BigInt(0));
        } else if (method == "recurrence") {
            const RecurrenceTable table(params.m(), params.n(), params.r(), hi);
            for (int k = lo; k <= hi; ++k) counts.push_back(table.at(params.n(), k));
        } else if (method == "partition") {
            for (int k = lo; k <= hi; ++k) counts.push_back(count_partition_formula(params, k));
        } else {
            for (int k = lo; k <= hi; ++k) counts.push_back(count_bruteforce(params.m(), params.n(), params.r(), k));
        }

        out << "k,E,p_exact\n";
        for (int k = lo; k <= hi; ++k) {
            const BigInt& e = counts[k - lo];
            out << k << ',' << e.str() << ',' << format_fraction(Rational(e, binomial(params.length(), k))) << '\n';
        }
        return kOk;
    }
};

// prob -----------------------------------------------------------------------

struct ProbCmd {
    CodeFlags code;
    std::optional<int> k;
    std::optional<std::string> p;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("prob", "exact and asymptotic decoding-success probability");
        code.add(*cmd);
        auto* k_opt = cmd->add_option("--k", k, "exactly k symbol errors");
        auto* p_opt = cmd->add_option("--p", p, "independent symbol error probability (decimal or a/b)");
        k_opt->excludes(p_opt);
        p_opt->excludes(k_opt);
    }

    static void print_gap(std::ostream& out, double exact, double asym) {
        out << "asymptotic=" << format_shortest(asym) << '\n'
            << "abs_gap=" << format_shortest(std::abs(asym - exact)) << '\n'
            << "rel_gap=" << (exact > 0.0 ? format_shortest(std::abs(asym - exact) / exact) : std::string("inf"))
            << '\n';
    }

    int run(std::ostream& out) const {
        if (k.has_value() == p.has_value()) throw FlagError("--k/--p", "give exactly one of --k and --p");
        const auto params = code.params();
        if (k) {
            const Rational exact = with_flag("--k", [&] { return prob_exact_k(params, *k); });
            const double value = to_double(exact);
            out << "exact=" << format_fraction(exact) << '\n' << "decimal=" << format_shortest(value) << '\n';
            if (asym_prob_k_admissible(params, *k))
                print_gap(out, value, asym_prob_k(params, *k));
            else
                out << "asymptotic=unavailable (k/n outside the saddle window)\n";
        } else {
            const Rational prob = with_flag("--p", [&] { return parse_rational(*p); });
            const Rational exact = with_flag("--p", [&] { return prob_channel(params, prob); });
            const double value = to_double(exact);
            out << "exact=" << format_fraction(exact) << '\n' << "decimal=" << format_shortest(value) << '\n';
            if (prob > 0 && prob < 1 && params.r() > 0)
                print_gap(out, value, asym_prob_channel(params, to_double(prob)));
            else
                out << "asymptotic=unavailable (needs 0 < p < 1 and r >= 1)\n";
        }
        return kOk;
    }
};

// figure ---------------------------------------------------------------------

struct FigureCmd {
    std::string name;
    std::optional<std::string> out_path;
    int fig2_blocks = kFig2BlockCount;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("figure", "CSV data (and a gnuplot script) for the comparison plots");
        cmd->add_option("name", name, "fig1 | fig2")->required()->check(CLI::IsMember({"fig1", "fig2"}));
        cmd->add_option("--out", out_path, "CSV file to write; a .gp script is written next to it");
        cmd->add_option("--n", fig2_blocks, "number of blocks for fig2")->check(CLI::PositiveNumber);
    }

    int run(std::ostream& out) const {
        std::optional<std::filesystem::path> csv_path;
        if (out_path) {
            csv_path = *out_path;
        } else if (const char* dir = std::getenv(kOutDirEnv); dir && *dir) {
            csv_path = std::filesystem::path(dir) / (name + ".csv");
        }

        std::ostringstream csv;
        std::string script;
        const std::string csv_name = csv_path ? csv_path->filename().string() : name + ".csv";
        if (name == "fig1") {
            write_figure1_csv(csv, figure1_rows());
            script = figure1_gnuplot(csv_name);
        } else {
            write_figure2_csv(csv, figure2_rows(kFig2BlockSizes, fig2_blocks));
            script = figure2_gnuplot(csv_name);
        }

        if (!csv_path) {
            out << csv.str();
            return kOk;
        }
        if (csv_path->has_parent_path()) std::filesystem::create_directories(csv_path->parent_path());
        auto gp_path = *csv_path;
        gp_path.replace_extension(".gp");
        std::ofstream(*csv_path, std::ios::binary) << csv.str();
        std::ofstream(gp_path, std::ios::binary) << script;
        out << "wrote " << csv_path->string() << '\n' << "wrote " << gp_path.string() << '\n';
        return kOk;
    }
};

// simulate -------------------------------------------------------------------

struct SimulateCmd {
    CodeFlags code;
    std::optional<std::string> k_list;
    std::optional<std::string> p_list;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
    bool csv = false;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("simulate", "Monte Carlo transmission, decoding and classification");
        code.add(*cmd);
        auto* k_opt = cmd->add_option("--k", k_list, "fixed error counts, comma separated");
        auto* p_opt = cmd->add_option("--p", p_list, "independent error probabilities, comma separated");
        k_opt->excludes(p_opt);
        p_opt->excludes(k_opt);
        cmd->add_option("--trials", trials, "trials per configuration")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "base seed");
        cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
        cmd->add_flag("--csv", csv, "one CSV row per configuration instead of text");
    }

    int run(std::ostream& out) const {
        if (k_list.has_value() == p_list.has_value()) throw FlagError("--k/--p", "give exactly one of --k and --p");
        const auto params = code.params();

        struct Config {
            ErrorModel model;
            std::string label;
            std::string value;
            Rational exact;
        };
        std::vector<Config> configs;
        if (k_list) {
            for (const auto& item : split_list(*k_list)) {
                const int k = with_flag("--k", [&] {
                    const auto v = parse_int_list(item);
                    if (v.size() != 1) throw std::invalid_argument("bad error count '" + item + "'");
                    return v[0];
                });
                const Rational exact = with_flag("--k", [&] { return prob_exact_k(params, k); });
                configs.push_back({FixedK{k}, "fixed_k", std::to_string(k), exact});
            }
        } else {
            for (const auto& item : split_list(*p_list)) {
                const Rational p = with_flag("--p", [&] { return parse_rational(item); });
                const Rational exact = with_flag("--p", [&] { return prob_channel(params, p); });
                configs.push_back({IID{to_double(p)}, "iid", item, exact});
            }
        }
        if (configs.empty()) throw FlagError(k_list ? "--k" : "--p", "empty list");

        if (csv)
            out << "m,n,model,value,trials,successes,detected_failures,miscorrections,guaranteed_successes,empirical_rate,wilson_lo,"
                   "wilson_hi,exact,exact_in_interval\n";
        for (const auto& c : configs) {
            const auto report = run_trials(params, c.model, trials, seed, workers);
            const double exact = to_double(c.exact);
            const bool inside = report.wilson.lo <= exact && exact <= report.wilson.hi;
            if (csv) {
                out << params.m() << ',' << params.n() << ',' << c.label << ',' << c.value << ',' << report.trials
                    << ',' << report.successes << ',' << report.detected_failures << ',' << report.miscorrections
                    << ',' << report.guaranteed_successes << ',' << format_csv_double(report.empirical_rate) << ','
                    << format_csv_double(report.wilson.lo) << ',' << format_csv_double(report.wilson.hi) << ','
                    << format_csv_double(exact) << ',' << (inside ? 1 : 0) << '\n';
            } else {
                out << "model=" << c.label << '(' << c.value << ")\n"
                    << "trials=" << report.trials << '\n'
                    << "successes=" << report.successes << '\n'
                    << "detected_failures=" << report.detected_failures << '\n'
                    << "miscorrections=" << report.miscorrections << '\n'
                    << "guaranteed_successes=" << report.guaranteed_successes << '\n'
                    << "empirical_rate=" << format_shortest(report.empirical_rate) << '\n'
                    << "wilson99=[" << format_shortest(report.wilson.lo) << ", " << format_shortest(report.wilson.hi)
                    << "]\n"
                    << "exact=" << format_shortest(exact) << '\n'
                    << "exact_in_interval=" << (inside ? "yes" : "no") << '\n';
            }
        }
        return kOk;
    }
};

// bench ----------------------------------------------------------------------

struct BenchCmd {
    std::string m_list = "8,16,32,64,128";
    std::string n_list = "8";
    int reps = 31;
    int iterations = 200;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("bench", "median wall-clock decode time per (m, n) (CSV)");
        cmd->add_option("--m", m_list, "block sizes, comma separated");
        cmd->add_option("--n", n_list, "block counts, comma separated");
        cmd->add_option("--reps", reps, "timed repetitions per configuration")->check(CLI::PositiveNumber);
        cmd->add_option("--iterations", iterations, "decodes per repetition")->check(CLI::PositiveNumber);
    }

    int run(std::ostream& out, std::ostream& err) const {
        auto ints = [](const std::string& flag, const std::string& text) {
            auto v = with_flag(flag, [&] { return parse_int_list(text); });
            if (v.empty()) throw FlagError(flag, "empty list");
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return v;
        };
        const auto ms = ints("--m", m_list);
        const auto ns = ints("--n", n_list);

        struct Row {
            int m, n;
            double median_ns;
        };
        std::vector<Row> rows;
        for (int m : ms) {
            for (int n : ns) {
                const CodeParams params = with_flag("--m/--n", [&] { return CodeParams(m, n); });
                std::mt19937_64 rng(12345);
                const auto sent = random_element(params, rng);
                const auto received = corrupt(encode(sent, params), FixedK{params.r()}, rng).word;
                std::vector<double> samples;
                samples.reserve(reps);
                std::size_t sink = 0;
                for (int rep = 0; rep < reps; ++rep) {
                    const auto start = std::chrono::steady_clock::now();
                    for (int it = 0; it < iterations; ++it) sink += decode(received).ok();
                    const auto stop = std::chrono::steady_clock::now();
                    samples.push_back(std::chrono::duration<double, std::nano>(stop - start).count() / iterations);
                }
                if (sink == 0) err << "warning: benchmark word failed to decode\n";
                std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
                rows.push_back({m, n, samples[samples.size() / 2]});
            }
        }

        out << "m,n,median_ns\n";
        for (const auto& row : rows) out << row.m << ',' << row.n << ',' << format_csv_double(row.median_ns) << '\n';

        // Soft check: doubling m at fixed n should cost at most a factor 3 once m >= 64.
        for (const auto& a : rows)
            for (const auto& b : rows)
                if (b.n == a.n && b.m == 2 * a.m && a.m >= 64) {
                    const double ratio = b.median_ns / a.median_ns;
                    err << "soft-check m=" << a.m << "->" << b.m << " n=" << a.n << " ratio=" << format_shortest(ratio)
                        << (ratio <= 3.0 ? " ok" : " exceeds 3") << '\n';
                }
        return kOk;
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Majority-logic decoding and error-pattern analysis for C_m wr S_n permutation codes", "wreath"};
    app.require_subcommand(1);

    EncodeCmd encode_cmd;
    DecodeCmd decode_cmd;
    EnumerateCmd enumerate_cmd;
    ProbCmd prob_cmd;
    FigureCmd figure_cmd;
    SimulateCmd simulate_cmd;
    BenchCmd bench_cmd;
    encode_cmd.add(app);
    decode_cmd.add(app);
    enumerate_cmd.add(app);
    prob_cmd.add(app);
    figure_cmd.add(app);
    simulate_cmd.add(app);
    bench_cmd.add(app);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        const auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "encode") return encode_cmd.run(out);
        if (name == "decode") return decode_cmd.run(out);
        if (name == "enumerate") return enumerate_cmd.run(out);
        if (name == "prob") return prob_cmd.run(out);
        if (name == "figure") return figure_cmd.run(out);
        if (name == "simulate") return simulate_cmd.run(out);
        if (name == "bench") return bench_cmd.run(out, err);
    } catch (const RefusalError& e) {
        err << "refused: " << e.what() << '\n';
        return kRefused;
    } catch (const FlagError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}

}  // namespace wreath::cli
