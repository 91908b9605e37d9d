#pragma once

// The generalised hyperoctahedral group C_m wr S_n used as a permutation code.
//
// A codeword is a permutation of {1,...,nm} in list form, split into n blocks
// of m symbols. Each block carries a block label b (0-based) and a cyclic
// shift c in {0,...,m-1}; the decoder recovers both by per-block majority.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wreath {

/// Code parameters (m, n). The correction capability r = floor((m-1)/2) is
/// always derived from m.
class CodeParams {
public:
    CodeParams(int m, int n);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int r() const noexcept { return (m_ - 1) / 2; }
    int length() const noexcept { return m_ * n_; }
    int min_distance() const noexcept { return m_; }

    bool operator==(const CodeParams&) const = default;

private:
    int m_;
    int n_;
};

/// An abstract group element: block permutation beta (0-based labels) and one
/// cyclic shift per block.
struct GroupElement {
    std::vector<int> beta;
    std::vector<int> shifts;

    bool operator==(const GroupElement&) const = default;

    static GroupElement identity(const CodeParams& params);
};

/// Throws std::invalid_argument unless g is a valid element for params.
void validate(const GroupElement& g, const CodeParams& params);

/// A received or transmitted word: nm symbols from {1,...,nm}. Entries may
/// repeat since a corrupted word need not be a permutation.
class Word {
public:
    Word(std::vector<int> symbols, const CodeParams& params);

    const CodeParams& params() const noexcept { return params_; }
    std::span<const int> symbols() const noexcept { return symbols_; }
    std::span<const int> block(int i) const;
    int operator[](std::size_t pos) const { return symbols_[pos]; }
    std::size_t size() const noexcept { return symbols_.size(); }

    bool operator==(const Word&) const = default;

private:
    std::vector<int> symbols_;
    CodeParams params_;
};

struct SymbolDecomposition {
    int b;  // block label, 0-based
    int c;  // cyclic shift in [0, m)

    bool operator==(const SymbolDecomposition&) const = default;
};

/// Maps symbol s (1-based) at within-block position j (1-based) to its block
/// label and shift. Remainder 0 maps to offset m with the quotient decremented.
SymbolDecomposition decompose_symbol(int s, int j, const CodeParams& params);

/// Inverse of decompose_symbol: the symbol m*b + t with t in {1,...,m}.
int compose_symbol(int b, int c, int j, const CodeParams& params);

Word encode(const GroupElement& g, const CodeParams& params);

/// Unique mode of `list` over the alphabet {0,...,alphabet_size-1}, computed
/// with an auxiliary frequency array. std::nullopt when the maximum frequency
/// is shared by two or more symbols.
std::optional<int> majority(std::span<const int> list, int alphabet_size);

enum class DecodeKind { Decoded, AmbiguousMajority, InvalidReconstruction };

std::string_view to_string(DecodeKind kind);

struct DecodeOutcome {
    DecodeKind kind = DecodeKind::Decoded;
    std::optional<GroupElement> element;
    // AmbiguousMajority: 0-based index of the first block without a unique mode.
    int block = -1;
    // InvalidReconstruction: the majority label list that is not a permutation.
    std::vector<int> labels;

    bool ok() const noexcept { return kind == DecodeKind::Decoded; }
};

/// Optional view of the per-position intermediate (b, c) pairs computed
/// during decoding, in word order.
struct DecodeTrace {
    std::vector<SymbolDecomposition> pairs;
};

DecodeOutcome decode(const Word& w, DecodeTrace* trace = nullptr);

int hamming_distance(const Word& u, const Word& v);

/// 1-based positions where u and v differ.
std::vector<int> differing_positions(const Word& u, const Word& v);

struct DistanceWitness {
    GroupElement first;
    GroupElement second;
    int distance;
};

/// Identity versus a one-step shift of block 0: distinct codewords at the
/// minimum distance m.
DistanceWitness min_distance_witness(const CodeParams& params);

/// Uniform element: Fisher-Yates shuffle for beta, uniform shifts.
GroupElement random_element(const CodeParams& params, std::mt19937_64& rng);

// Text forms. Words are comma-separated 1-based symbols; '|' and whitespace
// are ignored on input. Elements are "beta=<0-based list>; shifts=<list>".

std::vector<int> parse_int_list(std::string_view text);
Word parse_word(std::string_view text, const CodeParams& params);
std::string format_word(const Word& w, bool block_separators = false);
GroupElement parse_element(std::string_view text, const CodeParams& params);
std::string format_element(const GroupElement& g);
std::string format_int_list(std::span<const int> values);

}  // namespace wreath
