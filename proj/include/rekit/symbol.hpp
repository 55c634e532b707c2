#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace rekit {

/// An alphabet letter. Ids 0..25 are the letters `a`..`z`; id 26+n is `a_n`.
struct Symbol {
    std::uint32_t id = 0;

    friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

/// Sorted, duplicate-free list of symbols.
using Alphabet = std::vector<Symbol>;

std::string symbolName(Symbol s);

/// Inverse of symbolName. Throws rekit::Error on a malformed name.
Symbol symbolFromName(std::string_view name);

/// The `index`-th letter of the standard k-letter alphabet: `a`..`z` when
/// k <= 26, otherwise `a_1`..`a_k`.
Symbol standardLetter(std::size_t index, std::size_t k);

Alphabet standardAlphabet(std::size_t k);

} // namespace rekit

template <> struct std::hash<rekit::Symbol> {
    std::size_t operator()(rekit::Symbol s) const noexcept { return std::hash<std::uint32_t>{}(s.id); }
};
