#include "rekit/automata.hpp"

#include "rekit/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace rekit {

// ---------------------------------------------------------------- Nfa

std::optional<std::uint32_t> Nfa::labelOf(Symbol s) const {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), s);
    if (it == alphabet_.end() || *it != s)
        return std::nullopt;
    return static_cast<std::uint32_t>(it - alphabet_.begin());
}

std::span<const Transition> Nfa::outgoing(State q) const {
    if (q >= numStates_)
        throw Error("state out of range");
    return std::span<const Transition>(transitions_).subspan(offsets_[q], offsets_[q + 1] - offsets_[q]);
}

std::vector<State> Nfa::successors(State q, std::uint32_t label) const {
    std::vector<State> out;
    for (const Transition &t : outgoing(q))
        if (t.label == label)
            out.push_back(t.to);
    return out;
}

NfaBuilder::NfaBuilder(Alphabet alphabet, std::size_t numStates)
    : alphabet_(std::move(alphabet)), numStates_(numStates) {
    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
}

State NfaBuilder::addState() { return static_cast<State>(numStates_++); }

void NfaBuilder::checkState(State q) const {
    if (q >= numStates_)
        throw Error("state " + std::to_string(q) + " is not declared");
}

void NfaBuilder::addTransition(State from, Symbol symbol, State to) {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), symbol);
    if (it == alphabet_.end() || *it != symbol)
        throw Error("symbol '" + symbolName(symbol) + "' is not in the alphabet");
    addLabelledTransition(from, static_cast<std::uint32_t>(it - alphabet_.begin()), to);
}

void NfaBuilder::addLabelledTransition(State from, std::uint32_t label, State to) {
    checkState(from);
    checkState(to);
    if (label >= alphabet_.size())
        throw Error("label out of range");
    transitions_.push_back({from, label, to});
}

void NfaBuilder::addInitial(State q) {
    checkState(q);
    initials_.push_back(q);
}

void NfaBuilder::addFinal(State q) {
    checkState(q);
    finals_.push_back(q);
}

Nfa NfaBuilder::build() && {
    auto normalize = [](auto &v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    Nfa a;
    a.numStates_ = numStates_;
    a.alphabet_ = std::move(alphabet_);
    normalize(transitions_);
    normalize(initials_);
    normalize(finals_);
    a.transitions_ = std::move(transitions_);
    a.initials_ = std::move(initials_);
    a.finals_ = std::move(finals_);
    a.offsets_.assign(numStates_ + 1, 0);
    for (const Transition &t : a.transitions_)
        ++a.offsets_[t.from + 1];
    std::partial_sum(a.offsets_.begin(), a.offsets_.end(), a.offsets_.begin());
    a.initialFlags_.assign(numStates_, 0);
    a.finalFlags_.assign(numStates_, 0);
    for (State q : a.initials_)
        a.initialFlags_[q] = 1;
    for (State q : a.finals_)
        a.finalFlags_[q] = 1;
    return a;
}

// ---------------------------------------------------------------- Dfa

Dfa::Dfa(Alphabet alphabet, std::size_t numStates, State initial, std::vector<char> finals,
         std::vector<std::int32_t> table)
    : alphabet_(std::move(alphabet)), numStates_(numStates), initial_(initial), finals_(std::move(finals)),
      table_(std::move(table)) {
    if (numStates_ == 0 || initial_ >= numStates_)
        throw Error("a DFA needs a valid initial state");
    if (finals_.size() != numStates_ || table_.size() != numStates_ * alphabet_.size())
        throw Error("DFA tables do not match the state count");
    for (std::int32_t t : table_)
        if (t != kNone && (t < 0 || static_cast<std::size_t>(t) >= numStates_))
            throw Error("DFA transition target out of range");
}

std::size_t Dfa::numTransitions() const noexcept {
    return static_cast<std::size_t>(std::count_if(table_.begin(), table_.end(), [](auto t) { return t != kNone; }));
}

std::optional<State> Dfa::next(State q, std::uint32_t label) const {
    const std::int32_t t = table_.at(static_cast<std::size_t>(q) * alphabet_.size() + label);
    if (t == kNone)
        return std::nullopt;
    return static_cast<State>(t);
}

bool Dfa::isComplete() const noexcept {
    return std::none_of(table_.begin(), table_.end(), [](auto t) { return t == kNone; });
}

Nfa Dfa::toNfa() const {
    NfaBuilder b(alphabet_, numStates_);
    b.addInitial(initial_);
    const std::size_t k = alphabet_.size();
    for (State q = 0; q < numStates_; ++q) {
        if (finals_[q])
            b.addFinal(q);
        for (std::uint32_t a = 0; a < k; ++a)
            if (auto t = table_[q * k + a]; t != kNone)
                b.addLabelledTransition(q, a, static_cast<State>(t));
    }
    return std::move(b).build();
}

// ---------------------------------------------------------------- Partition

Partition::Partition(const std::vector<std::uint32_t> &labels) {
    std::map<std::uint32_t, std::uint32_t> renumber;
    blockOf_.resize(labels.size());
    for (State q = 0; q < labels.size(); ++q) {
        auto [it, inserted] = renumber.try_emplace(labels[q], static_cast<std::uint32_t>(blocks_.size()));
        if (inserted)
            blocks_.emplace_back();
        blockOf_[q] = it->second;
        blocks_[it->second].push_back(q);
    }
}

Partition Partition::fromBlocks(std::size_t n, const std::vector<std::vector<State>> &blocks) {
    std::vector<std::uint32_t> labels(n, UINT32_MAX);
    for (std::uint32_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw Error("partition has an empty block");
        for (State q : blocks[b]) {
            if (q >= n)
                throw Error("partition block refers to an unknown state");
            if (labels[q] != UINT32_MAX)
                throw Error("partition blocks overlap");
            labels[q] = b;
        }
    }
    if (std::find(labels.begin(), labels.end(), UINT32_MAX) != labels.end())
        throw Error("partition does not cover every state");
    return Partition(labels);
}

Partition Partition::identity(std::size_t n) {
    std::vector<std::uint32_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0u);
    return Partition(labels);
}

Partition Partition::single(std::size_t n) { return Partition(std::vector<std::uint32_t>(n, 0)); }

bool Partition::isFinerThan(const Partition &other) const {
    if (other.numStates() != numStates())
        return false;
    for (const auto &block : blocks_)
        for (State q : block)
            if (other.blockOf(q) != other.blockOf(block.front()))
                return false;
    return true;
}

// ---------------------------------------------------------------- predicates

bool isDeterministic(const Nfa &a) {
    if (a.initials().size() > 1)
        return false;
    const auto ts = a.transitions();
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (ts[i].from == ts[i - 1].from && ts[i].label == ts[i - 1].label)
            return false;
    return true;
}

bool isHomogeneous(const Nfa &a) {
    std::vector<std::int64_t> incoming(a.numStates(), -1);
    for (const Transition &t : a.transitions()) {
        if (incoming[t.to] == -1)
            incoming[t.to] = t.label;
        else if (incoming[t.to] != t.label)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------- transformations

Nfa reverse(const Nfa &a) {
    NfaBuilder b(a.alphabet(), a.numStates());
    for (const Transition &t : a.transitions())
        b.addLabelledTransition(t.to, t.label, t.from);
    for (State q : a.finals())
        b.addInitial(q);
    for (State q : a.initials())
        b.addFinal(q);
    return std::move(b).build();
}

bool isRightInvariant(const Nfa &a, const Partition &e) {
    if (e.numStates() != a.numStates())
        return false;
    // For every state, the set of (label, target block) pairs it can reach.
    std::vector<std::set<std::pair<std::uint32_t, std::uint32_t>>> image(a.numStates());
    for (const Transition &t : a.transitions())
        image[t.from].emplace(t.label, e.blockOf(t.to));
    for (const auto &block : e.blocks()) {
        const State rep = block.front();
        for (State q : block)
            if (a.isFinal(q) != a.isFinal(rep) || image[q] != image[rep])
                return false;
    }
    return true;
}

Nfa quotient(const Nfa &a, const Partition &e) {
    if (e.numStates() != a.numStates())
        throw Error("partition does not cover the automaton's states");
    NfaBuilder b(a.alphabet(), e.numBlocks());
    for (const Transition &t : a.transitions())
        b.addLabelledTransition(e.blockOf(t.from), t.label, e.blockOf(t.to));
    for (State q : a.initials())
        b.addInitial(e.blockOf(q));
    for (State q : a.finals())
        b.addFinal(e.blockOf(q));
    return std::move(b).build();
}

Dfa determinize(const Nfa &a) {
    const std::size_t k = a.alphabet().size();
    std::map<std::vector<State>, State> ids;
    std::vector<std::vector<State>> subsets;
    std::vector<std::int32_t> table;
    std::vector<char> finals;

    auto intern = [&](std::vector<State> subset) -> State {
        auto [it, inserted] = ids.try_emplace(subset, static_cast<State>(subsets.size()));
        if (inserted) {
            finals.push_back(std::any_of(subset.begin(), subset.end(), [&](State q) { return a.isFinal(q); }));
            subsets.push_back(std::move(subset));
            table.resize(subsets.size() * k, Dfa::kNone);
        }
        return it->second;
    };

    intern(a.initials());
    std::vector<std::vector<State>> next(k);
    for (State current = 0; current < subsets.size(); ++current) {
        for (auto &n : next)
            n.clear();
        for (State q : subsets[current])
            for (const Transition &t : a.outgoing(q))
                next[t.label].push_back(t.to);
        for (std::uint32_t label = 0; label < k; ++label) {
            auto &target = next[label];
            if (target.empty())
                continue;
            std::sort(target.begin(), target.end());
            target.erase(std::unique(target.begin(), target.end()), target.end());
            const State id = intern(target);
            table[static_cast<std::size_t>(current) * k + label] = static_cast<std::int32_t>(id);
        }
    }
    return Dfa(a.alphabet(), subsets.size(), 0, std::move(finals), std::move(table));
}

} // namespace rekit
