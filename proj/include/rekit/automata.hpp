#pragma once

// NFA/DFA data model and the generic automaton algebra.

#include "rekit/symbol.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rekit {

using State = std::uint32_t;

/// A transition; `label` indexes the automaton's alphabet.
struct Transition {
    State from;
    std::uint32_t label;
    State to;

    friend constexpr auto operator<=>(const Transition &, const Transition &) = default;
};

/// Immutable nondeterministic automaton over states 0..n-1 with a set of
/// initial states. Built through NfaBuilder.
class Nfa {
public:
    Nfa() = default;

    std::size_t numStates() const noexcept { return numStates_; }
    std::size_t numTransitions() const noexcept { return transitions_.size(); }
    /// |Q| + |δ|
    std::size_t size() const noexcept { return numStates_ + transitions_.size(); }

    const Alphabet &alphabet() const noexcept { return alphabet_; }
    Symbol symbolOf(std::uint32_t label) const { return alphabet_.at(label); }
    std::optional<std::uint32_t> labelOf(Symbol s) const;

    /// Sorted by (from, label, to), duplicate-free.
    std::span<const Transition> transitions() const noexcept { return transitions_; }
    /// Transitions leaving `q`, sorted by (label, to).
    std::span<const Transition> outgoing(State q) const;
    /// Targets of the `label`-transitions leaving `q`, sorted.
    std::vector<State> successors(State q, std::uint32_t label) const;

    const std::vector<State> &initials() const noexcept { return initials_; }
    const std::vector<State> &finals() const noexcept { return finals_; }
    bool isInitial(State q) const { return initialFlags_.at(q) != 0; }
    bool isFinal(State q) const { return finalFlags_.at(q) != 0; }

    friend bool operator==(const Nfa &, const Nfa &) = default;

private:
    friend class NfaBuilder;

    std::size_t numStates_ = 0;
    Alphabet alphabet_;
    std::vector<Transition> transitions_;
    std::vector<std::size_t> offsets_; // outgoing(q) = [offsets_[q], offsets_[q+1])
    std::vector<State> initials_;
    std::vector<State> finals_;
    std::vector<char> initialFlags_;
    std::vector<char> finalFlags_;
};

class NfaBuilder {
public:
    /// `alphabet` need not be sorted; it is normalized.
    explicit NfaBuilder(Alphabet alphabet, std::size_t numStates = 0);

    State addState();
    std::size_t numStates() const noexcept { return numStates_; }
    const Alphabet &alphabet() const noexcept { return alphabet_; }

    void addTransition(State from, Symbol symbol, State to);
    void addLabelledTransition(State from, std::uint32_t label, State to);
    void addInitial(State q);
    void addFinal(State q);

    Nfa build() &&;

private:
    void checkState(State q) const;

    Alphabet alphabet_;
    std::size_t numStates_;
    std::vector<Transition> transitions_;
    std::vector<State> initials_;
    std::vector<State> finals_;
};

/// Deterministic automaton with a single initial state. Missing entries of
/// the transition table are undefined transitions.
class Dfa {
public:
    static constexpr std::int32_t kNone = -1;

    Dfa(Alphabet alphabet, std::size_t numStates, State initial, std::vector<char> finals,
        std::vector<std::int32_t> table);

    std::size_t numStates() const noexcept { return numStates_; }
    std::size_t numTransitions() const noexcept;
    const Alphabet &alphabet() const noexcept { return alphabet_; }
    State initial() const noexcept { return initial_; }
    bool isFinal(State q) const { return finals_.at(q) != 0; }
    std::optional<State> next(State q, std::uint32_t label) const;
    /// Every (state, letter) pair has a successor.
    bool isComplete() const noexcept;

    Nfa toNfa() const;

    friend bool operator==(const Dfa &, const Dfa &) = default;

private:
    Alphabet alphabet_;
    std::size_t numStates_;
    State initial_;
    std::vector<char> finals_;
    std::vector<std::int32_t> table_; // state * |Σ| + label
};

/// Equivalence relation over states 0..n-1 as disjoint blocks. Blocks are
/// numbered in order of their smallest member.
class Partition {
public:
    Partition() = default;
    /// Blocks are the classes of equal labels; any label values are allowed.
    explicit Partition(const std::vector<std::uint32_t> &labels);
    /// Throws Error unless `blocks` are disjoint and cover 0..n-1.
    static Partition fromBlocks(std::size_t n, const std::vector<std::vector<State>> &blocks);
    static Partition identity(std::size_t n);
    static Partition single(std::size_t n);

    std::size_t numStates() const noexcept { return blockOf_.size(); }
    std::size_t numBlocks() const noexcept { return blocks_.size(); }
    std::uint32_t blockOf(State q) const { return blockOf_.at(q); }
    const std::vector<std::vector<State>> &blocks() const noexcept { return blocks_; }
    bool related(State p, State q) const { return blockOf(p) == blockOf(q); }

    /// Every block of this partition lies inside a block of `other`.
    bool isFinerThan(const Partition &other) const;

    friend bool operator==(const Partition &, const Partition &) = default;

private:
    std::vector<std::uint32_t> blockOf_;
    std::vector<std::vector<State>> blocks_;
};

bool isDeterministic(const Nfa &a);
bool isHomogeneous(const Nfa &a);

/// Flips every transition and swaps initial and final states.
Nfa reverse(const Nfa &a);

/// Right invariance: `e` never mixes final and non-final states, and related
/// states reach the same blocks under every letter.
bool isRightInvariant(const Nfa &a, const Partition &e);

/// Quotient automaton: states are blocks, initial (final) blocks are those
/// containing an initial (final) state. Throws Error when `e` does not
/// partition the states of `a`.
Nfa quotient(const Nfa &a, const Partition &e);

/// Accessible subset construction. Undefined transitions stand for the empty
/// subset, which is never materialized except as the initial state of an
/// automaton without initial states.
Dfa determinize(const Nfa &a);

/// Minimal trimmed DFA: unreachable and dead states are removed (the initial
/// state is always kept). States are numbered in breadth-first order from the
/// initial state, so equal languages give identical results.
Dfa minimize(const Dfa &d);

/// Bijection on states preserving initial and final states and labelled
/// transitions. Both automata must share the same alphabet.
bool isomorphic(const Nfa &a, const Nfa &b);

} // namespace rekit
