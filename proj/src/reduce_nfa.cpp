#include "rekit/reduce_nfa.hpp"

namespace rekit {

Partition autobisimulation(const Nfa &a) {
    const std::size_t n = a.numStates();
    const std::size_t k = a.alphabet().size();

    std::vector<std::vector<State>> succ(n * k);
    for (const Transition &t : a.transitions())
        succ[t.from * k + t.label].push_back(t.to);

    // distinct[p * n + q]: p and q are known not to be equivalent.
    std::vector<char> distinct(n * n, 0);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q)
            distinct[p * n + q] = a.isFinal(p) != a.isFinal(q);

    // Some letter takes x to a state z that is distinct from every state y
    // reaches by the same letter.
    auto separated = [&](State x, State y) {
        for (std::size_t label = 0; label < k; ++label) {
            const auto &fromY = succ[y * k + label];
            for (State z : succ[x * k + label]) {
                bool all = true;
                for (State w : fromY)
                    if (!distinct[z * n + w]) {
                        all = false;
                        break;
                    }
                if (all)
                    return true;
            }
        }
        return false;
    };

    for (bool changed = true; changed;) {
        changed = false;
        for (State x = 0; x < n; ++x)
            for (State y = 0; y < n; ++y) {
                if (distinct[x * n + y] || !separated(x, y))
                    continue;
                distinct[x * n + y] = 1;
                distinct[y * n + x] = 1;
                changed = true;
            }
    }

    std::vector<std::uint32_t> labels(n);
    for (State q = 0; q < n; ++q) {
        State p = 0;
        while (distinct[p * n + q])
            ++p;
        labels[q] = p;
    }
    return Partition(labels);
}

Nfa rEquiv(const Nfa &a) { return quotient(a, autobisimulation(a)); }

Nfa lEquiv(const Nfa &a) { return quotient(a, autobisimulation(reverse(a))); }

Nfa lrEquiv(const Nfa &a) { return rEquiv(lEquiv(a)); }

} // namespace rekit
