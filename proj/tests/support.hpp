#pragma once

// Shared fixtures for the test suites: a random expression generator that is
// independent of the grammar sampler, a backtracking matcher, and small
// builders.

#include "rekit/automata.hpp"
#include "rekit/build.hpp"
#include "rekit/oracle.hpp"
#include "rekit/syntax.hpp"

#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace testing {

using namespace rekit;

inline Symbol sym(char c) { return Symbol{static_cast<std::uint32_t>(c - 'a')}; }
inline Regex re(std::string_view text) { return parse(text); }

/// Random tree with exactly `nodes` nodes over the first k letters; leaves
/// include ε and ∅ with low probability.
inline Regex randomRegex(std::mt19937_64 &rng, std::size_t nodes, std::size_t k, bool constants = true) {
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    if (nodes <= 1) {
        if (constants) {
            const std::size_t c = pick(12);
            if (c == 0)
                return Regex::epsilon();
            if (c == 1)
                return Regex::empty();
        }
        return Regex::letter(standardLetter(pick(k), k));
    }
    if (nodes == 2 || pick(4) == 0)
        return Regex::star(randomRegex(rng, nodes - 1, k, constants));
    const std::size_t left = 1 + pick(nodes - 2);
    Regex l = randomRegex(rng, left, k, constants);
    Regex r = randomRegex(rng, nodes - 1 - left, k, constants);
    return pick(2) == 0 ? Regex::alt(std::move(l), std::move(r)) : Regex::concat(std::move(l), std::move(r));
}

/// Membership by exhaustive splitting, memoized on (node, begin, end).
class Matcher {
public:
    explicit Matcher(const Word &w) : w_(w) {}

    bool matches(const Regex &r) { return match(r, 0, w_.size()); }

private:
    bool match(const Regex &r, std::size_t i, std::size_t j) {
        const auto key = std::make_tuple(r, i, j);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        bool out = false;
        switch (r.kind()) {
        case RegexKind::Empty: out = false; break;
        case RegexKind::Epsilon: out = i == j; break;
        case RegexKind::Letter: out = j == i + 1 && w_[i] == r.symbol(); break;
        case RegexKind::Union: out = match(r.left(), i, j) || match(r.right(), i, j); break;
        case RegexKind::Concat:
            for (std::size_t m = i; m <= j && !out; ++m)
                out = match(r.left(), i, m) && match(r.right(), m, j);
            break;
        case RegexKind::Star:
            if (i == j)
                out = true;
            for (std::size_t m = i + 1; m <= j && !out; ++m)
                out = match(r.child(), i, m) && match(r, m, j);
            break;
        }
        memo_.emplace(key, out);
        return out;
    }

    const Word &w_;
    std::map<std::tuple<Regex, std::size_t, std::size_t>, bool> memo_;
};

/// Every word over `letters` of length <= maxLen.
inline std::vector<Word> allWords(const std::vector<Symbol> &letters, std::size_t maxLen) {
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= maxLen; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (Symbol s : letters) {
                Word w = out[i];
                w.push_back(s);
                out.push_back(std::move(w));
            }
        begin = end;
    }
    return out;
}

/// {w : |w| <= maxLen, w matches r} by brute force.
inline std::set<Word> bruteLanguage(const Regex &r, const std::vector<Symbol> &letters, std::size_t maxLen) {
    std::set<Word> out;
    for (const Word &w : allWords(letters, maxLen))
        if (Matcher(w).matches(r))
            out.insert(w);
    return out;
}

/// Transitions as (from, symbol-name, to) triples.
inline std::set<std::tuple<State, std::string, State>> triples(const Nfa &a) {
    std::set<std::tuple<State, std::string, State>> out;
    for (const Transition &t : a.transitions())
        out.emplace(t.from, symbolName(a.symbolOf(t.label)), t.to);
    return out;
}

inline Nfa makeNfa(std::size_t n, std::vector<std::tuple<State, char, State>> delta, std::vector<State> initials,
                   std::vector<State> finals, Alphabet alphabet = {Symbol{0}, Symbol{1}}) {
    NfaBuilder b(std::move(alphabet), n);
    for (auto [p, c, q] : delta)
        b.addTransition(p, sym(c), q);
    for (State q : initials)
        b.addInitial(q);
    for (State q : finals)
        b.addFinal(q);
    return std::move(b).build();
}

} // namespace testing
