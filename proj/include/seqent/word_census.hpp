#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "seqent/mass_distribution.hpp"
#include "seqent/symbol_sequence.hpp"

namespace seqent {

/// Exact census of the length-n windows of the first N symbols of a
/// sequence. Every window start i with i + n <= N is counted, overlaps
/// included, so the counts sum to N - n + 1.
///
/// Words are keyed by their base-r integer code when r^n fits in a signed
/// 64-bit word; otherwise the raw symbol string is the key.
class WordCountTable {
public:
    using IntegerCounts = std::unordered_map<std::uint64_t, std::uint64_t>;
    using StringCounts = std::unordered_map<std::string, std::uint64_t>;

    std::uint32_t alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t word_length() const noexcept { return word_length_; }
    std::size_t prefix_length() const noexcept { return prefix_length_; }
    std::uint64_t window_total() const noexcept { return window_total_; }

    bool uses_integer_keys() const noexcept { return integer_keys_; }
    const IntegerCounts& integer_counts() const noexcept { return int_counts_; }
    const StringCounts& string_counts() const noexcept { return str_counts_; }

    /// Occurrence count of w, zero if w never occurs. w must have the table's
    /// word length and symbols below the alphabet size.
    std::uint64_t count(const Word& w) const;

    std::uint64_t distinct_count() const noexcept {
        return integer_keys_ ? int_counts_.size() : str_counts_.size();
    }

    /// Invokes fn(count) for every distinct word.
    template <typename Fn>
    void for_each_count(Fn&& fn) const {
        if (integer_keys_) {
            for (const auto& [key, c] : int_counts_) fn(c);
        } else {
            for (const auto& [key, c] : str_counts_) fn(c);
        }
    }

private:
    friend WordCountTable count_words(const SymbolSequence&, std::size_t, std::size_t);

    std::uint32_t alphabet_size_ = 2;
    std::size_t word_length_ = 0;
    std::size_t prefix_length_ = 0;
    std::uint64_t window_total_ = 0;
    bool integer_keys_ = true;
    IntegerCounts int_counts_;
    StringCounts str_counts_;
};

/// Census of the length-n windows of x[0..N). N defaults to the full
/// sequence. Requires 1 <= n <= N; throws std::domain_error otherwise.
WordCountTable count_words(const SymbolSequence& x, std::size_t n,
                           std::size_t N = static_cast<std::size_t>(-1));

/// Empirical distribution: each count divided by the window total. The
/// support bound is r^n, or unbounded when r^n overflows 64 bits.
MassDistribution word_distribution(const WordCountTable& t);

std::uint64_t distinct_count(const WordCountTable& t);

/// Number of occurrences of w among windows of the first N symbols
/// (overlapping). Requires |w| >= 1 and |w| <= N <= length(x).
std::uint64_t occurrences(const SymbolSequence& x, const Word& w, std::size_t N);

/// Number of 1 symbols among the first N symbols of a binary sequence.
std::uint64_t ones_count(const SymbolSequence& b, std::size_t N);

/// Frequency of all-zero length-n windows among the first N symbols of a
/// binary sequence, normalized by N - n (not the window count N - n + 1),
/// so an all-zero sequence yields a value slightly above 1.
/// Requires 2 <= n < N.
double zero_word_frequency(const SymbolSequence& b, std::size_t n, std::size_t N);

/// Summary statistics of a window census computed without materializing the
/// count table: window total, distinct count, and Shannon entropy in bits of
/// the empirical distribution. Agrees exactly with count_words.
struct WordStats {
    std::uint64_t windows = 0;
    std::uint64_t distinct = 0;
    double entropy_bits = 0.0;
};

WordStats word_stats(const SymbolSequence& x, std::size_t n,
                     std::size_t N = static_cast<std::size_t>(-1));

}  // namespace seqent
