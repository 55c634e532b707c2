#pragma once

// Independent ground truth: bounded language enumeration and exhaustive
// search for the coarsest right-invariant equivalence.

#include "rekit/automata.hpp"
#include "rekit/syntax.hpp"

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace rekit {

using Word = std::vector<Symbol>;

/// The words of a language up to a length bound.
///
/// Words are packed 7 bits per letter, so the bound is at most 9 and symbol
/// ids at most 126.
class BoundedLanguage {
public:
    static constexpr std::size_t kMaxLength = 9;

    explicit BoundedLanguage(std::size_t maxLength);

    std::size_t maxLength() const noexcept { return byLength_.size() - 1; }
    /// Number of words.
    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }
    bool contains(std::span<const Symbol> word) const;
    std::set<Word> words() const;
    /// Words rendered by concatenating symbol names, "" for the empty word.
    std::set<std::string> renderedWords() const;

    /// Packed words of length n, sorted and unique.
    const std::vector<std::uint64_t> &ofLength(std::size_t n) const { return byLength_.at(n); }
    std::vector<std::uint64_t> &ofLength(std::size_t n) { return byLength_.at(n); }

    static std::uint64_t encode(std::span<const Symbol> word);

    friend bool operator==(const BoundedLanguage &, const BoundedLanguage &) = default;

private:
    std::vector<std::vector<std::uint64_t>> byLength_;
};

/// Direct evaluation of the inductive language equations, length-bounded.
BoundedLanguage enumerateRe(const Regex &r, std::size_t maxLength);

/// Words of length <= maxLength with a path from an initial to a final state.
BoundedLanguage enumerateNfa(const Nfa &a, std::size_t maxLength);

inline BoundedLanguage enumerate(const Regex &r, std::size_t maxLength) { return enumerateRe(r, maxLength); }
inline BoundedLanguage enumerate(const Nfa &a, std::size_t maxLength) { return enumerateNfa(a, maxLength); }

template <typename X, typename Y> bool equivalentUpTo(const X &x, const Y &y, std::size_t maxLength) {
    return enumerate(x, maxLength) == enumerate(y, maxLength);
}

/// Largest state count accepted by bruteCoarsestRightInvariant.
inline constexpr std::size_t kBruteForceStateLimit = 8;

/// Coarsest right-invariant equivalence by checking every partition of the
/// states. Throws Error above kBruteForceStateLimit states.
Partition bruteCoarsestRightInvariant(const Nfa &a);

} // namespace rekit
