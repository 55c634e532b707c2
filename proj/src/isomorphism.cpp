// Automaton isomorphism: colour refinement on the disjoint union, then a
// backtracking search restricted to equally coloured states.

#include "rekit/automata.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace rekit {

namespace {

using Signature = std::pair<std::uint32_t, std::vector<std::tuple<std::uint32_t, bool, std::uint32_t>>>;

struct Adjacency {
    std::vector<std::vector<std::pair<std::uint32_t, State>>> out;
    std::vector<std::vector<std::pair<std::uint32_t, State>>> in;

    explicit Adjacency(const Nfa &a) : out(a.numStates()), in(a.numStates()) {
        for (const Transition &t : a.transitions()) {
            out[t.from].emplace_back(t.label, t.to);
            in[t.to].emplace_back(t.label, t.from);
        }
    }
};

// Stable colouring of the union of both automata; b's states are offset by n.
std::vector<std::uint32_t> refineColours(const Nfa &a, const Adjacency &adjA, const Nfa &b, const Adjacency &adjB) {
    const std::size_t n = a.numStates();
    std::vector<std::uint32_t> colour(2 * n);
    for (State q = 0; q < n; ++q) {
        colour[q] = (a.isInitial(q) ? 2u : 0u) | (a.isFinal(q) ? 1u : 0u);
        colour[n + q] = (b.isInitial(q) ? 2u : 0u) | (b.isFinal(q) ? 1u : 0u);
    }
    std::size_t distinct = 0;
    for (;;) {
        std::map<Signature, std::uint32_t> ids;
        std::vector<std::uint32_t> next(2 * n);
        for (std::size_t v = 0; v < 2 * n; ++v) {
            const bool inB = v >= n;
            const State q = static_cast<State>(inB ? v - n : v);
            const Adjacency &adj = inB ? adjB : adjA;
            const std::size_t offset = inB ? n : 0;
            Signature sig{colour[v], {}};
            for (auto [label, to] : adj.out[q])
                sig.second.emplace_back(label, true, colour[offset + to]);
            for (auto [label, from] : adj.in[q])
                sig.second.emplace_back(label, false, colour[offset + from]);
            std::sort(sig.second.begin(), sig.second.end());
            next[v] = ids.try_emplace(std::move(sig), static_cast<std::uint32_t>(ids.size())).first->second;
        }
        colour = std::move(next);
        if (ids.size() == distinct)
            return colour;
        distinct = ids.size();
    }
}

class Matcher {
public:
    Matcher(const Nfa &a, const Adjacency &adjA, const Nfa &b, std::vector<std::uint32_t> colour)
        : a_(a), adjA_(adjA), b_(b), colour_(std::move(colour)), n_(a.numStates()),
          mapping_(n_, kUnmapped), used_(n_, 0) {
        // Most constrained states first: small colour classes, then ids.
        std::map<std::uint32_t, std::size_t> classSize;
        for (std::size_t v = 0; v < n_; ++v)
            ++classSize[colour_[v]];
        order_.resize(n_);
        for (State q = 0; q < n_; ++q)
            order_[q] = q;
        std::stable_sort(order_.begin(), order_.end(), [&](State x, State y) {
            return classSize[colour_[x]] < classSize[colour_[y]];
        });
    }

    bool run() { return assign(0); }

private:
    static constexpr State kUnmapped = UINT32_MAX;

    bool hasTransition(State from, std::uint32_t label, State to) const {
        const auto ts = b_.outgoing(from);
        return std::binary_search(ts.begin(), ts.end(), Transition{from, label, to});
    }

    bool consistent(State x, State y) const {
        for (auto [label, to] : adjA_.out[x]) {
            const State mapped = to == x ? y : mapping_[to];
            if (mapped != kUnmapped && !hasTransition(y, label, mapped))
                return false;
        }
        for (auto [label, from] : adjA_.in[x]) {
            if (from == x)
                continue;
            const State mapped = mapping_[from];
            if (mapped != kUnmapped && !hasTransition(mapped, label, y))
                return false;
        }
        return true;
    }

    bool assign(std::size_t depth) {
        if (depth == n_)
            return true;
        const State x = order_[depth];
        for (State y = 0; y < n_; ++y) {
            if (used_[y] || colour_[n_ + y] != colour_[x] || !consistent(x, y))
                continue;
            mapping_[x] = y;
            used_[y] = 1;
            if (assign(depth + 1))
                return true;
            mapping_[x] = kUnmapped;
            used_[y] = 0;
        }
        return false;
    }

    const Nfa &a_;
    const Adjacency &adjA_;
    const Nfa &b_;
    std::vector<std::uint32_t> colour_;
    std::size_t n_;
    std::vector<State> mapping_;
    std::vector<char> used_;
    std::vector<State> order_;
};

} // namespace

bool isomorphic(const Nfa &a, const Nfa &b) {
    if (a.alphabet() != b.alphabet() || a.numStates() != b.numStates() ||
        a.numTransitions() != b.numTransitions() || a.initials().size() != b.initials().size() ||
        a.finals().size() != b.finals().size())
        return false;
    const Adjacency adjA(a);
    const Adjacency adjB(b);
    auto colour = refineColours(a, adjA, b, adjB);
    const std::size_t n = a.numStates();
    std::vector<std::uint32_t> left(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<std::uint32_t> right(colour.begin() + static_cast<std::ptrdiff_t>(n), colour.end());
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (left != right)
        return false;
    // Every transition of a maps onto a distinct transition of b; equal
    // counts make that a bijection.
    return Matcher(a, adjA, b, std::move(colour)).run();
}

} // namespace rekit
