// Exact word counts, unranking and dataset emission.

#include "rekit/error.hpp"
#include "rekit/regen.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace rekit {

CountTable::CountTable(Grammar grammar, std::size_t maxLength)
    : grammar_(std::move(grammar)), maxLength_(maxLength) {
    const std::size_t n = grammar_.numNonterminals();
    counts_.assign(n, std::vector<BigInt>(maxLength_ + 1));
    suffix_.resize(n);
    for (std::uint32_t nt = 0; nt < n; ++nt)
        for (const Production &alt : grammar_.alternatives(nt))
            suffix_[nt].emplace_back(alt.size(), std::vector<BigInt>(maxLength_ + 1));

    // alt[pos..] at `length`; needs suffixes at shorter lengths, and symbol
    // counts at `length` only for the last symbol.
    auto suffixCount = [this](std::uint32_t nt, std::size_t a, std::size_t pos, std::size_t length) {
        const Production &alt = grammar_.alternatives(nt)[a];
        if (pos + 1 == alt.size())
            return symbolCount(alt[pos], length);
        BigInt total = 0;
        const std::size_t rest = alt.size() - pos - 1; // every symbol has length >= 1
        for (std::size_t i = 1; i + rest <= length; ++i) {
            const BigInt &tail = suffix_[nt][a][pos + 1][length - i];
            if (tail != 0)
                total += symbolCount(alt[pos], i) * tail;
        }
        return total;
    };

    for (std::size_t length = 1; length <= maxLength_; ++length) {
        for (std::uint32_t nt : grammar_.unitOrder()) {
            BigInt total = 0;
            for (std::size_t a = 0; a < grammar_.alternatives(nt).size(); ++a) {
                suffix_[nt][a][0][length] = suffixCount(nt, a, 0, length);
                total += suffix_[nt][a][0][length];
            }
            counts_[nt][length] = std::move(total);
        }
        for (std::uint32_t nt = 0; nt < n; ++nt)
            for (std::size_t a = 0; a < grammar_.alternatives(nt).size(); ++a)
                for (std::size_t pos = grammar_.alternatives(nt)[a].size(); pos-- > 1;)
                    suffix_[nt][a][pos][length] = suffixCount(nt, a, pos, length);
    }
}

const BigInt &CountTable::count(std::uint32_t nt, std::size_t length) const {
    if (length > maxLength_)
        throw Error("length exceeds the count table");
    return counts_.at(nt)[length];
}

BigInt CountTable::symbolCount(const GrammarSymbol &s, std::size_t length) const {
    switch (s.kind) {
    case GrammarSymbol::Kind::Terminal:
        return length == 1 ? 1 : 0;
    case GrammarSymbol::Kind::Letter:
        return length == 1 ? BigInt(grammar_.letterCount()) : BigInt(0);
    case GrammarSymbol::Kind::Nonterminal:
        return counts_[s.index][length];
    }
    return 0;
}

Sentence CountTable::unrank(std::size_t length, BigInt index) const {
    if (index < 0 || index >= count(length))
        throw Error("rank out of range");
    Sentence out;
    out.reserve(length);
    unrankNonterminal(grammar_.start(), length, std::move(index), out);
    return out;
}

void CountTable::unrankNonterminal(std::uint32_t nt, std::size_t length, BigInt index, Sentence &out) const {
    const auto &alts = grammar_.alternatives(nt);
    for (std::size_t a = 0; a < alts.size(); ++a) {
        const BigInt &c = suffix_[nt][a][0][length];
        if (index < c) {
            unrankSuffix(nt, a, 0, length, std::move(index), out);
            return;
        }
        index -= c;
    }
    throw Error("rank out of range");
}

void CountTable::unrankSuffix(std::uint32_t nt, std::size_t alt, std::size_t pos, std::size_t length, BigInt index,
                              Sentence &out) const {
    const Production &symbols = grammar_.alternatives(nt)[alt];
    if (pos + 1 == symbols.size()) {
        unrankSymbol(symbols[pos], length, std::move(index), out);
        return;
    }
    const std::size_t rest = symbols.size() - pos - 1;
    for (std::size_t i = 1; i + rest <= length; ++i) {
        const BigInt &tail = suffix_[nt][alt][pos + 1][length - i];
        if (tail == 0)
            continue;
        const BigInt c = symbolCount(symbols[pos], i) * tail;
        if (index < c) {
            unrankSymbol(symbols[pos], i, BigInt(index / tail), out);
            unrankSuffix(nt, alt, pos + 1, length - i, BigInt(index % tail), out);
            return;
        }
        index -= c;
    }
    throw Error("rank out of range");
}

void CountTable::unrankSymbol(const GrammarSymbol &s, std::size_t length, BigInt index, Sentence &out) const {
    switch (s.kind) {
    case GrammarSymbol::Kind::Terminal:
        out.push_back({false, s.index});
        return;
    case GrammarSymbol::Kind::Letter:
        out.push_back({true, index.convert_to<std::uint32_t>()});
        return;
    case GrammarSymbol::Kind::Nonterminal:
        unrankNonterminal(s.index, length, std::move(index), out);
        return;
    }
}

BigInt countWords(const Grammar &g, std::size_t length) { return CountTable(g, length).count(length); }

Rng rngStream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

void throwEmptyLanguage(std::size_t length) {
    throw Error("the grammar derives no word of length " + std::to_string(length));
}

std::vector<SampleRecord> emitDataset(std::size_t k, std::size_t size, std::size_t count, std::uint64_t seed) {
    const CountTable table(reGrammar(k), size);
    if (table.count(size) == 0)
        throwEmptyLanguage(size);
    std::vector<SampleRecord> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng = rngStream(seed, i);
        out.push_back({i, size, k, seed, renderSentence(table.grammar(), sampleUniform(table, size, rng))});
    }
    return out;
}

void writeDataset(std::ostream &out, const std::vector<SampleRecord> &records, std::uint64_t seed) {
    out << "# seed=" << seed << '\n';
    for (const SampleRecord &r : records)
        out << r.index << '\t' << r.size << '\t' << r.k << '\t' << r.text << '\n';
}

std::vector<SampleRecord> readDataset(std::istream &in) {
    std::vector<SampleRecord> out;
    std::uint64_t seed = 0;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty())
            continue;
        if (line[0] == '#') {
            if (auto p = line.find("seed="); p != std::string::npos)
                seed = std::stoull(line.substr(p + 5));
            continue;
        }
        std::istringstream fields(line);
        SampleRecord r;
        r.seed = seed;
        if (!(fields >> r.index >> r.size >> r.k) || !(fields.get() == '\t') || !std::getline(fields, r.text))
            throw Error("malformed dataset line " + std::to_string(lineNo));
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace rekit
