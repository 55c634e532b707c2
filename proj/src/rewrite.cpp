// Expression rewriting: reduction rules, star normal form, position marking.

#include "rekit/error.hpp"
#include "rekit/syntax.hpp"

namespace rekit {

Regex reduce(const Regex &r) {
    switch (r.kind()) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
    case RegexKind::Letter:
        return r;
    case RegexKind::Union: {
        Regex a = reduce(r.left());
        Regex b = reduce(r.right());
        if (a.is(RegexKind::Empty))
            return b;
        if (b.is(RegexKind::Empty))
            return a;
        if (a.is(RegexKind::Epsilon) && b.nullable())
            return b;
        if (b.is(RegexKind::Epsilon) && a.nullable())
            return a;
        if (a == r.left() && b == r.right())
            return r;
        return Regex::alt(std::move(a), std::move(b));
    }
    case RegexKind::Concat: {
        Regex a = reduce(r.left());
        Regex b = reduce(r.right());
        if (a.is(RegexKind::Empty) || b.is(RegexKind::Empty))
            return Regex::empty();
        if (a.is(RegexKind::Epsilon))
            return b;
        if (b.is(RegexKind::Epsilon))
            return a;
        if (a == r.left() && b == r.right())
            return r;
        return Regex::concat(std::move(a), std::move(b));
    }
    case RegexKind::Star: {
        Regex c = reduce(r.child());
        if (c.is(RegexKind::Empty) || c.is(RegexKind::Epsilon))
            return Regex::epsilon();
        if (c.is(RegexKind::Star))
            return c;
        if (c == r.child())
            return r;
        return Regex::star(std::move(c));
    }
    }
    return r;
}

bool isReduced(const Regex &r) { return reduce(r) == r; }

namespace {

Regex snfCircle(const Regex &r);

// The bullet transform: rebuilds every starred subexpression from the
// circle transform of its body.
Regex snfBullet(const Regex &r) {
    switch (r.kind()) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
    case RegexKind::Letter:
        return r;
    case RegexKind::Union:
        return Regex::alt(snfBullet(r.left()), snfBullet(r.right()));
    case RegexKind::Concat:
        return Regex::concat(snfBullet(r.left()), snfBullet(r.right()));
    case RegexKind::Star:
        return Regex::star(snfCircle(r.child()));
    }
    return r;
}

// The circle transform: an expression with the same positions whose star
// has the same language and no ε-path back to its first positions.
Regex snfCircle(const Regex &r) {
    switch (r.kind()) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
        return Regex::empty();
    case RegexKind::Letter:
        return r;
    case RegexKind::Union:
        return Regex::alt(snfCircle(r.left()), snfCircle(r.right()));
    case RegexKind::Concat:
        if (r.left().nullable() && r.right().nullable())
            return Regex::alt(snfCircle(r.left()), snfCircle(r.right()));
        return Regex::concat(snfBullet(r.left()), snfBullet(r.right()));
    case RegexKind::Star:
        return snfCircle(r.child());
    }
    return r;
}

Regex markFrom(const Regex &r, std::vector<Symbol> &symbols) {
    switch (r.kind()) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
        return r;
    case RegexKind::Letter:
        symbols.push_back(r.symbol());
        return Regex::letter(Symbol{static_cast<std::uint32_t>(symbols.size())});
    case RegexKind::Union: {
        Regex a = markFrom(r.left(), symbols);
        return Regex::alt(std::move(a), markFrom(r.right(), symbols));
    }
    case RegexKind::Concat: {
        Regex a = markFrom(r.left(), symbols);
        return Regex::concat(std::move(a), markFrom(r.right(), symbols));
    }
    case RegexKind::Star:
        return Regex::star(markFrom(r.child(), symbols));
    }
    return r;
}

Regex unmarkWith(const Regex &r, const std::vector<Symbol> &symbols) {
    switch (r.kind()) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
        return r;
    case RegexKind::Letter: {
        const auto position = r.symbol().id;
        if (position == 0 || position > symbols.size())
            throw Error("marked expression refers to an unknown position");
        return Regex::letter(symbols[position - 1]);
    }
    case RegexKind::Union:
        return Regex::alt(unmarkWith(r.left(), symbols), unmarkWith(r.right(), symbols));
    case RegexKind::Concat:
        return Regex::concat(unmarkWith(r.left(), symbols), unmarkWith(r.right(), symbols));
    case RegexKind::Star:
        return Regex::star(unmarkWith(r.child(), symbols));
    }
    return r;
}

} // namespace

Regex toSnf(const Regex &r) { return snfBullet(r); }

MarkedRegex mark(const Regex &r) {
    MarkedRegex m;
    m.symbols.reserve(r.alph());
    m.marked = markFrom(r, m.symbols);
    return m;
}

Regex unmark(const MarkedRegex &m) { return unmarkWith(m.marked, m.symbols); }

} // namespace rekit
