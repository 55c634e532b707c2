#pragma once

// Regular expression to ε-free NFA constructions: position automaton, follow
// automaton and partial derivative automaton.

#include "rekit/automata.hpp"
#include "rekit/syntax.hpp"

#include <set>
#include <span>
#include <utility>
#include <vector>

namespace rekit {

using Position = std::uint32_t;
using PositionSet = std::set<Position>;

/// first/last/follow of a marked expression. `follow[0]` is `first`;
/// `follow[i]` for positions 1..alph.
struct FollowTable {
    PositionSet first;
    PositionSet last;
    std::vector<PositionSet> follow;
    bool nullable = false;
};

FollowTable followTable(const MarkedRegex &m);

/// Glushkov automaton: state 0 plus one state per position.
Nfa positionAutomaton(const Regex &r);
/// Position automaton of toSnf(r).
Nfa positionAutomatonSnf(const Regex &r);

/// Positions with equal follow sets and equal finality in the position
/// automaton.
Partition followEquivalence(const Regex &r);
Nfa followAutomaton(const Regex &r);

/// One-letter partial derivatives.
RegexSet sigmaDerivative(const Regex &r, Symbol s);
RegexSet sigmaDerivative(const RegexSet &rs, Symbol s);
RegexSet wordDerivative(const Regex &r, std::span<const Symbol> word);

/// Pairs (letter, tail) such that tail is a partial derivative by letter.
using LinearForm = std::set<std::pair<Symbol, Regex>>;
LinearForm linearForm(const Regex &r);

/// Worklist construction over linear forms. State 0 is `r`; the other
/// states are numbered in discovery order.
Nfa pdAutomaton(const Regex &r);

/// The partial derivatives labelling the states of pdAutomaton(r), indexed
/// by state id.
std::vector<Regex> pdStates(const Regex &r);

} // namespace rekit
