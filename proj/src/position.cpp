// first/last/follow by structural induction, the position automaton, star
// normal form test and the follow automaton.

#include "rekit/build.hpp"

#include <algorithm>
#include <map>

namespace rekit {

namespace {

struct Summary {
    PositionSet first;
    PositionSet last;
    bool nullable;
};

// Walks a marked expression, accumulating follow sets. `onStar(body)` is
// invoked for every starred subexpression before its loop edges are added,
// at which point `follow` restricted to the body's positions is exactly the
// body's own follow relation.
template <typename OnStar> class FollowWalker {
public:
    FollowWalker(std::size_t positions, OnStar onStar) : follow(positions + 1), onStar_(onStar) {}

    Summary walk(const Regex &r) {
        switch (r.kind()) {
        case RegexKind::Empty:
            return {{}, {}, false};
        case RegexKind::Epsilon:
            return {{}, {}, true};
        case RegexKind::Letter:
            return {{r.symbol().id}, {r.symbol().id}, false};
        case RegexKind::Union: {
            Summary a = walk(r.left());
            Summary b = walk(r.right());
            a.first.insert(b.first.begin(), b.first.end());
            a.last.insert(b.last.begin(), b.last.end());
            a.nullable = a.nullable || b.nullable;
            return a;
        }
        case RegexKind::Concat: {
            Summary a = walk(r.left());
            Summary b = walk(r.right());
            for (Position x : a.last)
                follow[x].insert(b.first.begin(), b.first.end());
            Summary out;
            out.first = a.first;
            if (a.nullable)
                out.first.insert(b.first.begin(), b.first.end());
            out.last = b.last;
            if (b.nullable)
                out.last.insert(a.last.begin(), a.last.end());
            out.nullable = a.nullable && b.nullable;
            return out;
        }
        case RegexKind::Star: {
            Summary a = walk(r.child());
            onStar_(a, follow);
            for (Position x : a.last)
                follow[x].insert(a.first.begin(), a.first.end());
            a.nullable = true;
            return a;
        }
        }
        return {};
    }

    std::vector<PositionSet> follow;

private:
    OnStar onStar_;
};

bool disjoint(const PositionSet &a, const PositionSet &b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j)
            return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

} // namespace

FollowTable followTable(const MarkedRegex &m) {
    FollowWalker walker(m.positions(), [](const Summary &, const std::vector<PositionSet> &) {});
    Summary s = walker.walk(m.marked);
    FollowTable table;
    table.follow = std::move(walker.follow);
    table.follow[0] = s.first;
    table.first = std::move(s.first);
    table.last = std::move(s.last);
    table.nullable = s.nullable;
    return table;
}

bool isSnf(const Regex &r) {
    const MarkedRegex m = mark(r);
    bool ok = true;
    FollowWalker walker(m.positions(), [&ok](const Summary &body, const std::vector<PositionSet> &follow) {
        if (!ok)
            return;
        if (body.nullable) {
            ok = false;
            return;
        }
        for (Position x : body.last)
            if (!disjoint(follow[x], body.first)) {
                ok = false;
                return;
            }
    });
    walker.walk(m.marked);
    return ok;
}

Nfa positionAutomaton(const Regex &r) {
    const MarkedRegex m = mark(r);
    const FollowTable table = followTable(m);
    NfaBuilder b(alphabetOf(r), m.positions() + 1);
    b.addInitial(0);
    for (Position i = 0; i <= m.positions(); ++i)
        for (Position j : table.follow[i])
            b.addTransition(i, m.symbolAt(j), j);
    for (Position x : table.last)
        b.addFinal(x);
    if (table.nullable)
        b.addFinal(0);
    return std::move(b).build();
}

Nfa positionAutomatonSnf(const Regex &r) { return positionAutomaton(toSnf(r)); }

Partition followEquivalence(const Regex &r) {
    const MarkedRegex m = mark(r);
    const FollowTable table = followTable(m);
    std::map<std::pair<bool, PositionSet>, std::uint32_t> classes;
    std::vector<std::uint32_t> labels(m.positions() + 1);
    for (Position x = 0; x <= m.positions(); ++x) {
        const bool final = x == 0 ? table.nullable : table.last.contains(x);
        labels[x] = classes.try_emplace({final, table.follow[x]}, static_cast<std::uint32_t>(classes.size()))
                        .first->second;
    }
    return Partition(labels);
}

Nfa followAutomaton(const Regex &r) { return quotient(positionAutomaton(r), followEquivalence(r)); }

} // namespace rekit
