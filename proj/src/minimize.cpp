// Hopcroft minimization over the trimmed, sink-completed DFA.

#include "rekit/automata.hpp"

#include <algorithm>
#include <deque>

namespace rekit {

namespace {

struct Refinement {
    std::vector<std::vector<State>> blocks;
    std::vector<std::uint32_t> blockOf;
};

// `delta[q * k + a]` is total over states 0..n-1.
Refinement hopcroft(std::size_t n, std::size_t k, const std::vector<State> &delta, const std::vector<char> &finals) {
    std::vector<std::vector<std::vector<State>>> inverse(k, std::vector<std::vector<State>>(n));
    for (State q = 0; q < n; ++q)
        for (std::size_t a = 0; a < k; ++a)
            inverse[a][delta[q * k + a]].push_back(q);

    Refinement p;
    p.blockOf.assign(n, 0);
    std::vector<State> accepting;
    std::vector<State> rejecting;
    for (State q = 0; q < n; ++q)
        (finals[q] ? accepting : rejecting).push_back(q);
    for (auto *part : {&accepting, &rejecting}) {
        if (part->empty())
            continue;
        for (State q : *part)
            p.blockOf[q] = static_cast<std::uint32_t>(p.blocks.size());
        p.blocks.push_back(std::move(*part));
    }

    std::deque<std::pair<std::uint32_t, std::uint32_t>> work;
    std::vector<std::vector<char>> queued;
    auto enqueue = [&](std::uint32_t block, std::uint32_t label) {
        if (!queued[block][label]) {
            queued[block][label] = 1;
            work.emplace_back(block, label);
        }
    };
    queued.assign(p.blocks.size(), std::vector<char>(k, 0));
    for (std::uint32_t b = 0; b < p.blocks.size(); ++b)
        for (std::uint32_t a = 0; a < k; ++a)
            enqueue(b, a);

    std::vector<char> marked(n, 0);
    std::vector<std::uint32_t> markedCount;
    while (!work.empty()) {
        auto [splitter, label] = work.front();
        work.pop_front();
        queued[splitter][label] = 0;

        std::vector<State> preimage;
        for (State target : p.blocks[splitter])
            for (State q : inverse[label][target])
                preimage.push_back(q);

        markedCount.assign(p.blocks.size(), 0);
        std::vector<std::uint32_t> touched;
        for (State q : preimage) {
            if (marked[q])
                continue;
            marked[q] = 1;
            if (markedCount[p.blockOf[q]]++ == 0)
                touched.push_back(p.blockOf[q]);
        }
        std::sort(touched.begin(), touched.end());
        for (std::uint32_t y : touched) {
            if (markedCount[y] == p.blocks[y].size())
                continue;
            std::vector<State> inside;
            std::vector<State> outside;
            for (State q : p.blocks[y])
                (marked[q] ? inside : outside).push_back(q);
            const auto z = static_cast<std::uint32_t>(p.blocks.size());
            p.blocks[y] = std::move(outside);
            p.blocks.push_back(std::move(inside));
            for (State q : p.blocks[z])
                p.blockOf[q] = z;
            queued.emplace_back(k, 0);
            for (std::uint32_t a = 0; a < k; ++a) {
                if (queued[y][a])
                    enqueue(z, a);
                else
                    enqueue(p.blocks[z].size() < p.blocks[y].size() ? z : y, a);
            }
        }
        for (State q : preimage)
            marked[q] = 0;
    }
    return p;
}

} // namespace

Dfa minimize(const Dfa &d) {
    const std::size_t n = d.numStates();
    const std::size_t k = d.alphabet().size();

    std::vector<char> reachable(n, 0);
    std::vector<State> stack{d.initial()};
    reachable[d.initial()] = 1;
    std::vector<std::vector<State>> predecessors(n);
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (std::uint32_t a = 0; a < k; ++a)
            if (auto t = d.next(q, a)) {
                predecessors[*t].push_back(q);
                if (!reachable[*t]) {
                    reachable[*t] = 1;
                    stack.push_back(*t);
                }
            }
    }
    std::vector<char> live(n, 0);
    for (State q = 0; q < n; ++q)
        if (reachable[q] && d.isFinal(q)) {
            live[q] = 1;
            stack.push_back(q);
        }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : predecessors[q])
            if (!live[p]) {
                live[p] = 1;
                stack.push_back(p);
            }
    }

    // Kept states get dense ids; the last id is the sink.
    std::vector<std::int64_t> index(n, -1);
    std::vector<State> kept;
    for (State q = 0; q < n; ++q)
        if (live[q] || q == d.initial()) {
            index[q] = static_cast<std::int64_t>(kept.size());
            kept.push_back(q);
        }
    const std::size_t m = kept.size() + 1;
    const auto sink = static_cast<State>(kept.size());
    std::vector<State> delta(m * k, sink);
    std::vector<char> finals(m, 0);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        finals[i] = d.isFinal(kept[i]);
        for (std::uint32_t a = 0; a < k; ++a)
            if (auto t = d.next(kept[i], a); t && index[*t] >= 0)
                delta[i * k + a] = static_cast<State>(index[*t]);
    }

    const Refinement classes = hopcroft(m, k, delta, finals);
    const std::uint32_t deadClass = classes.blockOf[sink];
    const std::uint32_t initialClass = classes.blockOf[static_cast<State>(index[d.initial()])];

    // Breadth-first renumbering from the initial class, dead class dropped.
    std::vector<std::int32_t> order(classes.blocks.size(), Dfa::kNone);
    std::vector<std::uint32_t> queue{initialClass};
    order[initialClass] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const State rep = classes.blocks[queue[head]].front();
        for (std::uint32_t a = 0; a < k; ++a) {
            const std::uint32_t c = classes.blockOf[delta[rep * k + a]];
            if (c == deadClass || order[c] != Dfa::kNone)
                continue;
            order[c] = static_cast<std::int32_t>(queue.size());
            queue.push_back(c);
        }
    }

    std::vector<std::int32_t> table(queue.size() * k, Dfa::kNone);
    std::vector<char> outFinals(queue.size(), 0);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const State rep = classes.blocks[queue[i]].front();
        outFinals[i] = finals[rep];
        if (queue[i] == deadClass)
            continue;
        for (std::uint32_t a = 0; a < k; ++a) {
            const std::uint32_t c = classes.blockOf[delta[rep * k + a]];
            if (c != deadClass)
                table[i * k + a] = order[c];
        }
    }
    return Dfa(d.alphabet(), queue.size(), 0, std::move(outFinals), std::move(table));
}

} // namespace rekit
