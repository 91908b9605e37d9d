#include "wreath/perm_code.hpp"

#include "wreath/rng.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace wreath {

CodeParams::CodeParams(int m, int n) : m_(m), n_(n) {
    if (m < 2) throw std::invalid_argument("block size m must be at least 2");
    if (n < 1) throw std::invalid_argument("block count n must be at least 1");
    if (m > 46340 / n) throw std::invalid_argument("code length n*m too large");
}

GroupElement GroupElement::identity(const CodeParams& params) {
    GroupElement g;
    g.beta.resize(params.n());
    std::iota(g.beta.begin(), g.beta.end(), 0);
    g.shifts.assign(params.n(), 0);
    return g;
}

namespace {

bool is_permutation_of_range(std::span<const int> labels, int n) {
    if (static_cast<int>(labels.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int b : labels) {
        if (b < 0 || b >= n || seen[b]) return false;
        seen[b] = 1;
    }
    return true;
}

}  // namespace

void validate(const GroupElement& g, const CodeParams& params) {
    if (!is_permutation_of_range(g.beta, params.n()))
        throw std::invalid_argument("beta must be a permutation of 0..n-1");
    if (static_cast<int>(g.shifts.size()) != params.n())
        throw std::invalid_argument("shifts must have one entry per block");
    for (int c : g.shifts)
        if (c < 0 || c >= params.m()) throw std::invalid_argument("shift out of range [0, m)");
}

Word::Word(std::vector<int> symbols, const CodeParams& params)
    : symbols_(std::move(symbols)), params_(params) {
    if (static_cast<int>(symbols_.size()) != params_.length())
        throw std::invalid_argument("word length must be n*m = " + std::to_string(params_.length()));
    for (int s : symbols_)
        if (s < 1 || s > params_.length())
            throw std::invalid_argument("symbol " + std::to_string(s) + " out of range [1, n*m]");
}

std::span<const int> Word::block(int i) const {
    if (i < 0 || i >= params_.n()) throw std::out_of_range("block index");
    return std::span<const int>(symbols_).subspan(static_cast<std::size_t>(i) * params_.m(), params_.m());
}

SymbolDecomposition decompose_symbol(int s, int j, const CodeParams& params) {
    const int m = params.m();
    if (s < 1 || s > params.length()) throw std::invalid_argument("symbol out of range [1, n*m]");
    if (j < 1 || j > m) throw std::invalid_argument("position out of range [1, m]");
    int q = s / m;
    int rem = s % m;
    if (rem == 0) {
        rem = m;
        --q;
    }
    return {q, ((rem - j) % m + m) % m};
}

int compose_symbol(int b, int c, int j, const CodeParams& params) {
    const int m = params.m();
    return m * b + (j - 1 + c) % m + 1;
}

Word encode(const GroupElement& g, const CodeParams& params) {
    validate(g, params);
    const int m = params.m();
    std::vector<int> symbols;
    symbols.reserve(params.length());
    for (int i = 0; i < params.n(); ++i)
        for (int j = 1; j <= m; ++j) symbols.push_back(compose_symbol(g.beta[i], g.shifts[i], j, params));
    return Word(std::move(symbols), params);
}

namespace {

// Frequency-array mode over a caller-owned scratch buffer of alphabet size.
std::optional<int> majority_with(std::span<const int> list, std::vector<int>& freq) {
    std::fill(freq.begin(), freq.end(), 0);
    for (int x : list) ++freq[x];
    int best = 0;
    bool unique = true;
    for (int x = 1; x < static_cast<int>(freq.size()); ++x) {
        if (freq[x] > freq[best]) {
            best = x;
            unique = true;
        } else if (freq[x] == freq[best]) {
            unique = false;
        }
    }
    if (!unique) return std::nullopt;
    return best;
}

}  // namespace

std::optional<int> majority(std::span<const int> list, int alphabet_size) {
    if (list.empty()) throw std::invalid_argument("majority of an empty list");
    if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be positive");
    for (int x : list)
        if (x < 0 || x >= alphabet_size) throw std::invalid_argument("symbol outside alphabet");
    std::vector<int> freq(alphabet_size);
    return majority_with(list, freq);
}

std::string_view to_string(DecodeKind kind) {
    switch (kind) {
        case DecodeKind::Decoded: return "Decoded";
        case DecodeKind::AmbiguousMajority: return "AmbiguousMajority";
        case DecodeKind::InvalidReconstruction: return "InvalidReconstruction";
    }
    return "Unknown";
}

DecodeOutcome decode(const Word& w, DecodeTrace* trace) {
    const CodeParams& params = w.params();
    const int m = params.m();
    const int n = params.n();

    std::vector<int> labels(m), shifts_seen(m);
    std::vector<int> label_freq(n), shift_freq(m);
    GroupElement g;
    g.beta.resize(n);
    g.shifts.resize(n);
    if (trace) {
        trace->pairs.clear();
        trace->pairs.reserve(params.length());
    }

    DecodeOutcome out;
    for (int i = 0; i < n; ++i) {
        const auto block = w.block(i);
        for (int j = 1; j <= m; ++j) {
            const auto bc = decompose_symbol(block[j - 1], j, params);
            labels[j - 1] = bc.b;
            shifts_seen[j - 1] = bc.c;
            if (trace) trace->pairs.push_back(bc);
        }
        const auto b_hat = majority_with(labels, label_freq);
        const auto c_hat = majority_with(shifts_seen, shift_freq);
        if ((!b_hat || !c_hat) && out.block < 0) {
            out.kind = DecodeKind::AmbiguousMajority;
            out.block = i;
            if (!trace) return out;
        }
        g.beta[i] = b_hat.value_or(-1);
        g.shifts[i] = c_hat.value_or(-1);
    }
    if (out.kind != DecodeKind::Decoded) return out;

    if (!is_permutation_of_range(g.beta, n)) {
        out.kind = DecodeKind::InvalidReconstruction;
        out.labels = std::move(g.beta);
        return out;
    }
    out.element = std::move(g);
    return out;
}

int hamming_distance(const Word& u, const Word& v) {
    if (!(u.params() == v.params())) throw std::invalid_argument("words have different code parameters");
    int d = 0;
    for (std::size_t p = 0; p < u.size(); ++p) d += u[p] != v[p];
    return d;
}

std::vector<int> differing_positions(const Word& u, const Word& v) {
    if (!(u.params() == v.params())) throw std::invalid_argument("words have different code parameters");
    std::vector<int> out;
    for (std::size_t p = 0; p < u.size(); ++p)
        if (u[p] != v[p]) out.push_back(static_cast<int>(p) + 1);
    return out;
}

DistanceWitness min_distance_witness(const CodeParams& params) {
    auto id = GroupElement::identity(params);
    auto shifted = id;
    shifted.shifts[0] = 1;
    const int d = hamming_distance(encode(id, params), encode(shifted, params));
    return {std::move(id), std::move(shifted), d};
}

GroupElement random_element(const CodeParams& params, std::mt19937_64& rng) {
    auto g = GroupElement::identity(params);
    for (int i = params.n() - 1; i > 0; --i) {
        const auto k = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(g.beta[i], g.beta[k]);
    }
    for (auto& c : g.shifts) c = static_cast<int>(uniform_below(rng, params.m()));
    return g;
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    auto is_sep = [](char ch) { return ch == ',' || ch == '|' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '[' || ch == ']'; };
    while (pos < text.size()) {
        while (pos < text.size() && is_sep(text[pos])) ++pos;
        if (pos == text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !is_sep(text[end])) ++end;
        int value = 0;
        const auto* first = text.data() + pos;
        const auto* last = text.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last)
            throw std::invalid_argument("not an integer: '" + std::string(first, last) + "'");
        out.push_back(value);
        pos = end;
    }
    return out;
}

Word parse_word(std::string_view text, const CodeParams& params) {
    return Word(parse_int_list(text), params);
}

std::string format_int_list(std::span<const int> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string format_word(const Word& w, bool block_separators) {
    if (!block_separators) return format_int_list(w.symbols());
    std::string out;
    for (int i = 0; i < w.params().n(); ++i) {
        if (i) out += " | ";
        out += format_int_list(w.block(i));
    }
    return out;
}

GroupElement parse_element(std::string_view text, const CodeParams& params) {
    const auto beta_at = text.find("beta=");
    const auto shifts_at = text.find("shifts=");
    if (beta_at == std::string_view::npos || shifts_at == std::string_view::npos)
        throw std::invalid_argument("element must read 'beta=...; shifts=...'");
    auto field = [&](std::size_t at, std::size_t key_len) {
        auto rest = text.substr(at + key_len);
        return rest.substr(0, rest.find(';'));
    };
    GroupElement g{parse_int_list(field(beta_at, 5)), parse_int_list(field(shifts_at, 7))};
    validate(g, params);
    return g;
}

std::string format_element(const GroupElement& g) {
    return "beta=" + format_int_list(g.beta) + "; shifts=" + format_int_list(g.shifts);
}

}  // namespace wreath
