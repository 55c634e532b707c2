// Partial derivatives, linear forms and the partial derivative automaton.

#include "rekit/build.hpp"

#include <tuple>
#include <unordered_map>

namespace rekit {

namespace {

// S ⊙ β, with ε·β written as β.
RegexSet concatEach(const RegexSet &heads, const Regex &tail) {
    RegexSet out;
    if (tail.is(RegexKind::Empty))
        return out;
    for (const Regex &h : heads)
        out.insert(h.is(RegexKind::Epsilon) ? tail : Regex::concat(h, tail));
    return out;
}

LinearForm concatEach(const LinearForm &lf, const Regex &tail) {
    LinearForm out;
    if (tail.is(RegexKind::Empty))
        return out;
    for (const auto &[head, t] : lf)
        out.emplace(head, t.is(RegexKind::Epsilon) ? tail : Regex::concat(t, tail));
    return out;
}

} // namespace

RegexSet sigmaDerivative(const Regex &r, Symbol s) {
    switch (r.kind()) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
        return {};
    case RegexKind::Letter:
        if (r.symbol() == s)
            return {Regex::epsilon()};
        return {};
    case RegexKind::Union: {
        RegexSet out = sigmaDerivative(r.left(), s);
        out.merge(sigmaDerivative(r.right(), s));
        return out;
    }
    case RegexKind::Concat: {
        RegexSet out = concatEach(sigmaDerivative(r.left(), s), r.right());
        if (r.left().nullable())
            out.merge(sigmaDerivative(r.right(), s));
        return out;
    }
    case RegexKind::Star:
        return concatEach(sigmaDerivative(r.child(), s), r);
    }
    return {};
}

RegexSet sigmaDerivative(const RegexSet &rs, Symbol s) {
    RegexSet out;
    for (const Regex &r : rs)
        out.merge(sigmaDerivative(r, s));
    return out;
}

RegexSet wordDerivative(const Regex &r, std::span<const Symbol> word) {
    RegexSet current{r};
    for (Symbol s : word)
        current = sigmaDerivative(current, s);
    return current;
}

LinearForm linearForm(const Regex &r) {
    switch (r.kind()) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
        return {};
    case RegexKind::Letter:
        return {{r.symbol(), Regex::epsilon()}};
    case RegexKind::Union: {
        LinearForm out = linearForm(r.left());
        out.merge(linearForm(r.right()));
        return out;
    }
    case RegexKind::Concat: {
        LinearForm out = concatEach(linearForm(r.left()), r.right());
        if (r.left().nullable())
            out.merge(linearForm(r.right()));
        return out;
    }
    case RegexKind::Star:
        return concatEach(linearForm(r.child()), r);
    }
    return {};
}

namespace {

struct PdConstruction {
    std::vector<Regex> states;
    std::vector<std::tuple<State, Symbol, State>> transitions;
};

PdConstruction buildPd(const Regex &r) {
    PdConstruction out;
    std::unordered_map<Regex, State, RegexHash> ids;
    ids.emplace(r, 0);
    out.states.push_back(r);
    std::vector<State> stack{0};
    while (!stack.empty()) {
        const State pd = stack.back();
        stack.pop_back();
        // Copy: `out.states` may grow below.
        const Regex current = out.states[pd];
        for (const auto &[head, tail] : linearForm(current)) {
            auto [it, inserted] = ids.try_emplace(tail, static_cast<State>(out.states.size()));
            if (inserted) {
                out.states.push_back(tail);
                stack.push_back(it->second);
            }
            out.transitions.emplace_back(pd, head, it->second);
        }
    }
    return out;
}

} // namespace

Nfa pdAutomaton(const Regex &r) {
    PdConstruction pd = buildPd(r);
    NfaBuilder b(alphabetOf(r), pd.states.size());
    b.addInitial(0);
    for (const auto &[from, symbol, to] : pd.transitions)
        b.addTransition(from, symbol, to);
    for (State q = 0; q < pd.states.size(); ++q)
        if (pd.states[q].nullable())
            b.addFinal(q);
    return std::move(b).build();
}

std::vector<Regex> pdStates(const Regex &r) { return buildPd(r).states; }

} // namespace rekit
