#pragma once

// Uniform random generation of fixed-length words of an unambiguous
// context-free grammar from exact arbitrary-precision counts, with the
// almost-reduced regular expression grammar built in.

#include "rekit/symbol.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace rekit {

using BigInt = boost::multiprecision::cpp_int;

struct GrammarSymbol {
    enum class Kind : std::uint8_t { Terminal, Nonterminal, Letter };

    Kind kind;
    std::uint32_t index = 0; // terminal or nonterminal index

    friend bool operator==(const GrammarSymbol &, const GrammarSymbol &) = default;
};

using Production = std::vector<GrammarSymbol>;

/// Context-free grammar whose terminals each have length one. The letter
/// class stands for any of `letterCount()` alphabet letters.
///
/// The grammar must be free of empty productions and of cycles of unit
/// productions; the constructor checks both. Unambiguity cannot be checked
/// and is the caller's responsibility.
class Grammar {
public:
    Grammar(std::vector<std::string> nonterminals, std::vector<std::string> terminals,
            std::vector<std::vector<Production>> productions, std::uint32_t start, std::size_t letterCount);

    std::size_t numNonterminals() const noexcept { return nonterminals_.size(); }
    const std::string &nonterminalName(std::uint32_t nt) const { return nonterminals_.at(nt); }
    std::uint32_t nonterminal(std::string_view name) const;
    const std::string &terminalText(std::uint32_t t) const { return terminals_.at(t); }
    const std::vector<Production> &alternatives(std::uint32_t nt) const { return productions_.at(nt); }
    std::uint32_t start() const noexcept { return start_; }
    std::size_t letterCount() const noexcept { return letterCount_; }

    /// Nonterminals ordered so that unit productions point backwards.
    const std::vector<std::uint32_t> &unitOrder() const noexcept { return unitOrder_; }

    /// Alternatives of `nt` in the grammar notation, e.g. `C R | R R`.
    std::string productionText(std::uint32_t nt) const;

private:
    std::vector<std::string> nonterminals_;
    std::vector<std::string> terminals_;
    std::vector<std::vector<Production>> productions_;
    std::uint32_t start_;
    std::size_t letterCount_;
    std::vector<std::uint32_t> unitOrder_;
};

/// Reads rules `NT := alt | alt ;` where an alternative is a sequence of
/// nonterminal names, quoted terminals and `SIGMA`. The first rule's
/// left-hand side is the start symbol.
Grammar parseGrammar(std::string_view text, std::size_t letterCount);

/// Lee–Shallit grammar for almost reduced regular expressions over k letters.
Grammar reGrammar(std::size_t k);

/// Text of reGrammar in the notation accepted by parseGrammar.
std::string_view reGrammarText();

/// A generated word: terminals by index, letters by alphabet index.
struct GeneratedToken {
    bool letter;
    std::uint32_t index;

    friend bool operator==(const GeneratedToken &, const GeneratedToken &) = default;
};
using Sentence = std::vector<GeneratedToken>;

std::string renderSentence(const Grammar &g, const Sentence &s);

/// Number of words of each length derivable from each nonterminal, and
/// from each suffix of each alternative, up to a maximum length.
class CountTable {
public:
    CountTable(Grammar grammar, std::size_t maxLength);

    const Grammar &grammar() const noexcept { return grammar_; }
    std::size_t maxLength() const noexcept { return maxLength_; }
    const BigInt &count(std::uint32_t nt, std::size_t length) const;
    const BigInt &count(std::size_t length) const { return count(grammar_.start(), length); }

    /// The word of rank `index` among the words of `length` derived from the
    /// start symbol; a bijection from [0, count(length)).
    Sentence unrank(std::size_t length, BigInt index) const;

private:
    BigInt symbolCount(const GrammarSymbol &s, std::size_t length) const;
    void unrankNonterminal(std::uint32_t nt, std::size_t length, BigInt index, Sentence &out) const;
    void unrankSuffix(std::uint32_t nt, std::size_t alt, std::size_t pos, std::size_t length, BigInt index,
                      Sentence &out) const;
    void unrankSymbol(const GrammarSymbol &s, std::size_t length, BigInt index, Sentence &out) const;

    Grammar grammar_;
    std::size_t maxLength_;
    std::vector<std::vector<BigInt>> counts_; // [nt][length]
    // [nt][alt][pos][length]: words of `length` derived from alt[pos..].
    std::vector<std::vector<std::vector<std::vector<BigInt>>>> suffix_;
};

BigInt countWords(const Grammar &g, std::size_t length);

/// Seedable pseudo-random stream; independent streams are derived from
/// (seed, stream id).
using Rng = std::mt19937_64;
Rng rngStream(std::uint64_t seed, std::uint64_t stream);

/// Uniform word of the given length. Throws Error if there is none.
template <typename Urbg> Sentence sampleUniform(const CountTable &table, std::size_t length, Urbg &rng);

struct SampleRecord {
    std::size_t index = 0;
    std::size_t size = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::string text;
};

/// `count` uniform regular expressions of ordinary length `size` over
/// `k` letters; record i is drawn from rngStream(seed, i).
std::vector<SampleRecord> emitDataset(std::size_t k, std::size_t size, std::size_t count, std::uint64_t seed);

/// One `# seed=...` header line, then `index<TAB>size<TAB>k<TAB>text` per record.
void writeDataset(std::ostream &out, const std::vector<SampleRecord> &records, std::uint64_t seed);
/// Inverse of writeDataset; the seed comes from the header when present.
std::vector<SampleRecord> readDataset(std::istream &in);

// ------------------------------------------------------------------ details

void throwEmptyLanguage(std::size_t length);

template <typename Urbg> Sentence sampleUniform(const CountTable &table, std::size_t length, Urbg &rng) {
    const BigInt &total = table.count(length);
    if (total == 0)
        throwEmptyLanguage(length);
    boost::random::uniform_int_distribution<BigInt> pick(BigInt(0), BigInt(total - 1));
    return table.unrank(length, pick(rng));
}

} // namespace rekit
