// Grammar model and the grammar notation reader.

#include "rekit/error.hpp"
#include "rekit/regen.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace rekit {

Grammar::Grammar(std::vector<std::string> nonterminals, std::vector<std::string> terminals,
                 std::vector<std::vector<Production>> productions, std::uint32_t start, std::size_t letterCount)
    : nonterminals_(std::move(nonterminals)), terminals_(std::move(terminals)), productions_(std::move(productions)),
      start_(start), letterCount_(letterCount) {
    const std::size_t n = nonterminals_.size();
    if (productions_.size() != n)
        throw Error("every nonterminal needs a production list");
    if (start_ >= n)
        throw Error("start symbol out of range");
    for (std::uint32_t nt = 0; nt < n; ++nt) {
        if (productions_[nt].empty())
            throw Error("nonterminal " + nonterminals_[nt] + " has no alternatives");
        for (const Production &alt : productions_[nt]) {
            if (alt.empty())
                throw Error("empty alternative for " + nonterminals_[nt]);
            for (const GrammarSymbol &s : alt) {
                if (s.kind == GrammarSymbol::Kind::Terminal && s.index >= terminals_.size())
                    throw Error("terminal index out of range");
                if (s.kind == GrammarSymbol::Kind::Nonterminal && s.index >= n)
                    throw Error("nonterminal index out of range");
            }
        }
    }

    // Depth-first topological sort over unit productions X := Y.
    std::vector<int> state(n, 0); // 0 new, 1 on stack, 2 done
    auto visit = [&](auto &&self, std::uint32_t nt) -> void {
        if (state[nt] == 2)
            return;
        if (state[nt] == 1)
            throw Error("cycle of unit productions through " + nonterminals_[nt]);
        state[nt] = 1;
        for (const Production &alt : productions_[nt])
            if (alt.size() == 1 && alt[0].kind == GrammarSymbol::Kind::Nonterminal)
                self(self, alt[0].index);
        state[nt] = 2;
        unitOrder_.push_back(nt);
    };
    for (std::uint32_t nt = 0; nt < n; ++nt)
        visit(visit, nt);
}

std::uint32_t Grammar::nonterminal(std::string_view name) const {
    auto it = std::find(nonterminals_.begin(), nonterminals_.end(), name);
    if (it == nonterminals_.end())
        throw Error("unknown nonterminal " + std::string(name));
    return static_cast<std::uint32_t>(it - nonterminals_.begin());
}

std::string Grammar::productionText(std::uint32_t nt) const {
    std::string out;
    for (const Production &alt : alternatives(nt)) {
        if (!out.empty())
            out += " | ";
        bool first = true;
        for (const GrammarSymbol &s : alt) {
            if (!first)
                out += ' ';
            first = false;
            switch (s.kind) {
            case GrammarSymbol::Kind::Terminal: out += '"' + terminals_[s.index] + '"'; break;
            case GrammarSymbol::Kind::Nonterminal: out += nonterminals_[s.index]; break;
            case GrammarSymbol::Kind::Letter: out += "SIGMA"; break;
            }
        }
    }
    return out;
}

namespace {

struct DslToken {
    enum class Kind { Name, Quoted, Define, Bar, Semi, End } kind;
    std::string text;
    std::size_t offset;
};

std::vector<DslToken> lexGrammar(std::string_view text) {
    std::vector<DslToken> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({DslToken::Kind::Name, std::string(text.substr(i, j - i)), i});
            i = j;
        } else if (c == '"' || c == '\'') {
            const std::size_t close = text.find(c, i + 1);
            if (close == std::string_view::npos)
                throw ParseError("unterminated terminal", i);
            if (close == i + 1)
                throw ParseError("empty terminal", i);
            out.push_back({DslToken::Kind::Quoted, std::string(text.substr(i + 1, close - i - 1)), i});
            i = close + 1;
        } else if (text.substr(i, 2) == ":=") {
            out.push_back({DslToken::Kind::Define, ":=", i});
            i += 2;
        } else if (c == '|') {
            out.push_back({DslToken::Kind::Bar, "|", i++});
        } else if (c == ';') {
            out.push_back({DslToken::Kind::Semi, ";", i++});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' in grammar", i);
        }
    }
    out.push_back({DslToken::Kind::End, "", text.size()});
    return out;
}

} // namespace

Grammar parseGrammar(std::string_view text, std::size_t letterCount) {
    const auto tokens = lexGrammar(text);
    std::vector<std::string> nonterminals;
    std::vector<std::string> terminals;
    std::map<std::string, std::uint32_t, std::less<>> ntIndex;
    std::map<std::string, std::uint32_t, std::less<>> termIndex;
    std::vector<std::optional<std::vector<Production>>> rules;
    std::map<std::uint32_t, std::size_t> firstUse;

    auto internNt = [&](const std::string &name) {
        auto [it, inserted] = ntIndex.try_emplace(name, static_cast<std::uint32_t>(nonterminals.size()));
        if (inserted) {
            nonterminals.push_back(name);
            rules.emplace_back();
        }
        return it->second;
    };
    auto internTerm = [&](const std::string &t) {
        auto [it, inserted] = termIndex.try_emplace(t, static_cast<std::uint32_t>(terminals.size()));
        if (inserted)
            terminals.push_back(t);
        return it->second;
    };

    std::size_t pos = 0;
    auto expect = [&](DslToken::Kind kind, const char *what) -> const DslToken & {
        if (tokens[pos].kind != kind)
            throw ParseError(std::string("expected ") + what, tokens[pos].offset);
        return tokens[pos++];
    };

    std::optional<std::uint32_t> start;
    while (tokens[pos].kind != DslToken::Kind::End) {
        const DslToken &lhs = expect(DslToken::Kind::Name, "a nonterminal");
        if (lhs.text == "SIGMA")
            throw ParseError("SIGMA cannot be defined", lhs.offset);
        const std::uint32_t nt = internNt(lhs.text);
        if (rules[nt])
            throw ParseError("nonterminal " + lhs.text + " defined twice", lhs.offset);
        if (!start)
            start = nt;
        expect(DslToken::Kind::Define, "':='");
        std::vector<Production> alts(1);
        for (;;) {
            const DslToken &t = tokens[pos];
            if (t.kind == DslToken::Kind::Name) {
                if (t.text == "SIGMA") {
                    alts.back().push_back({GrammarSymbol::Kind::Letter, 0});
                } else {
                    const std::uint32_t ref = internNt(t.text);
                    firstUse.try_emplace(ref, t.offset);
                    alts.back().push_back({GrammarSymbol::Kind::Nonterminal, ref});
                }
                ++pos;
            } else if (t.kind == DslToken::Kind::Quoted) {
                alts.back().push_back({GrammarSymbol::Kind::Terminal, internTerm(t.text)});
                ++pos;
            } else if (t.kind == DslToken::Kind::Bar || t.kind == DslToken::Kind::Semi) {
                if (alts.back().empty())
                    throw ParseError("empty alternative", t.offset);
                ++pos;
                if (t.kind == DslToken::Kind::Semi)
                    break;
                alts.emplace_back();
            } else {
                throw ParseError("expected a symbol, '|' or ';'", t.offset);
            }
        }
        rules[nt] = std::move(alts);
    }
    if (!start)
        throw ParseError("grammar has no rules", 0);
    std::vector<std::vector<Production>> productions;
    for (std::uint32_t nt = 0; nt < rules.size(); ++nt) {
        if (!rules[nt])
            throw ParseError("nonterminal " + nonterminals[nt] + " is never defined", firstUse[nt]);
        productions.push_back(std::move(*rules[nt]));
    }
    return Grammar(std::move(nonterminals), std::move(terminals), std::move(productions), *start, letterCount);
}

std::string_view reGrammarText() {
    return R"grammar(S := A | C | E | SIGMA | "@e" | "@0" ;
C := C R | R R ;
R := "(" A ")" | E | SIGMA ;
E := "(" A ")" "*" | "(" C ")" "*" | SIGMA "*" ;
A := "@e" "+" X | Y "+" Z ;
X := T | T "+" X ;
T := C | SIGMA ;
Y := Z | Y "+" Z ;
Z := C | E | SIGMA ;
)grammar";
}

Grammar reGrammar(std::size_t k) {
    if (k == 0)
        throw Error("alphabet size must be at least 1");
    return parseGrammar(reGrammarText(), k);
}

std::string renderSentence(const Grammar &g, const Sentence &s) {
    std::string out;
    for (const GeneratedToken &t : s)
        out += t.letter ? symbolName(standardLetter(t.index, g.letterCount())) : g.terminalText(t.index);
    return out;
}

} // namespace rekit
