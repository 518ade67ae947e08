#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace seqent {

using Word = std::vector<std::uint8_t>;

/// A finite sequence over the alphabet {0, ..., r-1}. Symbols are stored as
/// bytes; alphabets larger than 256 are not supported (every construction in
/// this library is binary or near-binary, and byte storage keeps sequences of
/// length 1e8 at 100 MB).
class SymbolSequence {
public:
    using Symbol = std::uint8_t;
    static constexpr std::uint32_t kMaxAlphabet = 256;

    SymbolSequence(std::uint32_t alphabet_size, std::vector<Symbol> symbols);

    std::uint32_t alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    std::span<const Symbol> view() const noexcept { return {symbols_.data(), symbols_.size()}; }

private:
    std::uint32_t alphabet_size_;
    std::vector<Symbol> symbols_;
};

}  // namespace seqent
