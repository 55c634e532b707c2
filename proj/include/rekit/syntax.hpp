#pragma once

// Regular-expression data model: construction, parsing, printing, measures,
// reduction rules, star normal form and position marking.

#include "rekit/symbol.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace rekit {

enum class RegexKind : std::uint8_t { Empty, Epsilon, Letter, Union, Concat, Star };

/// Immutable, reference-counted syntax tree. Copies share structure.
///
/// Equality and ordering are structural; hashing is structural too, so a
/// Regex can key both ordered and unordered containers. Nullability, the
/// alphabetic size and the node count are cached at construction.
class Regex {
public:
    /// The empty-language expression.
    Regex();

    static Regex empty();
    static Regex epsilon();
    static Regex letter(Symbol s);
    static Regex alt(Regex left, Regex right);
    static Regex concat(Regex left, Regex right);
    static Regex star(Regex child);

    RegexKind kind() const noexcept;
    bool is(RegexKind k) const noexcept { return kind() == k; }

    /// Letter nodes only.
    Symbol symbol() const;
    /// Union and Concat nodes only.
    const Regex &left() const;
    const Regex &right() const;
    /// Star nodes only.
    const Regex &child() const;

    bool nullable() const noexcept;
    std::size_t alph() const noexcept;
    std::size_t rpn() const noexcept;
    std::size_t hash() const noexcept;

    friend bool operator==(const Regex &a, const Regex &b) noexcept;
    friend std::strong_ordering operator<=>(const Regex &a, const Regex &b) noexcept;

    struct Node;

private:
    explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Regex make(RegexKind kind, Symbol symbol, Regex left, Regex right);

    std::shared_ptr<const Node> node_;
};

struct RegexHash {
    std::size_t operator()(const Regex &r) const noexcept { return r.hash(); }
};

using RegexSet = std::set<Regex>;

/// Sizes of an expression: ordinary length, letter occurrences, tree nodes.
struct Measures {
    std::size_t size = 0;
    std::size_t alph = 0;
    std::size_t rpn = 0;

    friend bool operator==(const Measures &, const Measures &) = default;
};

/// Parses the surface syntax:
///
///     expr   := term ('+' term)*
///     term   := factor+
///     factor := atom '*'*
///     atom   := SYMBOL | '@e' | '@0' | '(' expr ')'
///     SYMBOL := [a-z] | 'a_' DIGITS
///
/// Whitespace is ignored. When `alphabet` is given, every letter must belong
/// to it. Throws ParseError (lexical and syntax errors) or Error (letter not
/// in the alphabet).
Regex parse(std::string_view text, const std::optional<Alphabet> &alphabet = std::nullopt);

/// Minimally parenthesized text such that parse(render(r)) == r.
std::string render(const Regex &r);

Measures measures(const Regex &r);

/// Ordinary length: symbols of the rendering, parentheses included,
/// concatenation implicit.
std::size_t ordinarySize(const Regex &r);

inline bool nullable(const Regex &r) noexcept { return r.nullable(); }

/// Letters occurring in `r`, sorted.
Alphabet alphabetOf(const Regex &r);

/// Normalizes with the ε/∅ absorption, double star and redundant-ε rules in
/// one bottom-up pass.
Regex reduce(const Regex &r);
bool isReduced(const Regex &r);

bool isSnf(const Regex &r);
/// Equivalent expression in star normal form with the same position
/// automaton. Total on all inputs; the output may contain ∅ alternatives
/// where ε alternatives were removed under a star.
Regex toSnf(const Regex &r);

/// An expression whose letters are positions 1..alph in left-to-right order
/// (`marked` uses Symbol{i} for position i), plus the original letter of
/// every position (`symbols[i-1]`).
struct MarkedRegex {
    Regex marked;
    std::vector<Symbol> symbols;

    std::size_t positions() const noexcept { return symbols.size(); }
    Symbol symbolAt(std::uint32_t position) const { return symbols.at(position - 1); }
};

MarkedRegex mark(const Regex &r);
Regex unmark(const MarkedRegex &m);

} // namespace rekit

template <> struct std::hash<rekit::Regex> {
    std::size_t operator()(const rekit::Regex &r) const noexcept { return r.hash(); }
};
