#include "rekit/error.hpp"
#include "rekit/syntax.hpp"

#include <cassert>

namespace rekit {

struct Regex::Node {
    RegexKind kind;
    Symbol symbol;
    Regex left;
    Regex right;
    bool nullable;
    std::size_t alph;
    std::size_t rpn;
    std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 12) + (seed >> 4);
    return seed;
}

} // namespace

Regex Regex::make(RegexKind kind, Symbol symbol, Regex left, Regex right) {
    bool null = false;
    std::size_t alph = 0;
    std::size_t rpn = 1;
    std::size_t h = mix(0x51ed270b27f1d4a3ULL, static_cast<std::size_t>(kind));
    switch (kind) {
    case RegexKind::Empty:
        break;
    case RegexKind::Epsilon:
        null = true;
        break;
    case RegexKind::Letter:
        alph = 1;
        h = mix(h, symbol.id);
        break;
    case RegexKind::Union:
    case RegexKind::Concat:
        null = kind == RegexKind::Union ? (left.nullable() || right.nullable())
                                        : (left.nullable() && right.nullable());
        alph = left.alph() + right.alph();
        rpn += left.rpn() + right.rpn();
        h = mix(mix(h, left.hash()), right.hash());
        break;
    case RegexKind::Star:
        null = true;
        alph = left.alph();
        rpn += left.rpn();
        h = mix(h, left.hash());
        break;
    }
    auto node = std::make_shared<const Node>(
        Node{kind, symbol, std::move(left), std::move(right), null, alph, rpn, h});
    return Regex(std::move(node));
}

Regex::Regex() : Regex(empty()) {}

Regex Regex::empty() {
    // Leaves of the two constants have no children; construct them directly
    // to avoid recursing through the default constructor.
    static const Regex value(std::make_shared<const Node>(
        Node{RegexKind::Empty, {}, Regex(nullptr), Regex(nullptr), false, 0, 1,
             mix(0x51ed270b27f1d4a3ULL, static_cast<std::size_t>(RegexKind::Empty))}));
    return value;
}

Regex Regex::epsilon() {
    static const Regex value(std::make_shared<const Node>(
        Node{RegexKind::Epsilon, {}, Regex(nullptr), Regex(nullptr), true, 0, 1,
             mix(0x51ed270b27f1d4a3ULL, static_cast<std::size_t>(RegexKind::Epsilon))}));
    return value;
}

Regex Regex::letter(Symbol s) { return make(RegexKind::Letter, s, Regex(nullptr), Regex(nullptr)); }

Regex Regex::alt(Regex left, Regex right) {
    return make(RegexKind::Union, {}, std::move(left), std::move(right));
}

Regex Regex::concat(Regex left, Regex right) {
    return make(RegexKind::Concat, {}, std::move(left), std::move(right));
}

Regex Regex::star(Regex child) { return make(RegexKind::Star, {}, std::move(child), Regex(nullptr)); }

RegexKind Regex::kind() const noexcept { return node_->kind; }

Symbol Regex::symbol() const {
    if (node_->kind != RegexKind::Letter)
        throw Error("symbol() on a non-letter expression");
    return node_->symbol;
}

const Regex &Regex::left() const {
    if (node_->kind != RegexKind::Union && node_->kind != RegexKind::Concat)
        throw Error("left() on a non-binary expression");
    return node_->left;
}

const Regex &Regex::right() const {
    if (node_->kind != RegexKind::Union && node_->kind != RegexKind::Concat)
        throw Error("right() on a non-binary expression");
    return node_->right;
}

const Regex &Regex::child() const {
    if (node_->kind != RegexKind::Star)
        throw Error("child() on a non-star expression");
    return node_->left;
}

bool Regex::nullable() const noexcept { return node_->nullable; }
std::size_t Regex::alph() const noexcept { return node_->alph; }
std::size_t Regex::rpn() const noexcept { return node_->rpn; }
std::size_t Regex::hash() const noexcept { return node_->hash; }

namespace {

std::strong_ordering compareNodes(const Regex::Node &a, const Regex::Node &b) noexcept {
    if (&a == &b)
        return std::strong_ordering::equal;
    if (auto c = a.kind <=> b.kind; c != 0)
        return c;
    switch (a.kind) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
        return std::strong_ordering::equal;
    case RegexKind::Letter:
        return a.symbol <=> b.symbol;
    case RegexKind::Star:
        return a.left <=> b.left;
    case RegexKind::Union:
    case RegexKind::Concat:
        if (auto c = a.left <=> b.left; c != 0)
            return c;
        return a.right <=> b.right;
    }
    return std::strong_ordering::equal;
}

} // namespace

bool operator==(const Regex &a, const Regex &b) noexcept {
    if (a.node_ == b.node_)
        return true;
    if (a.node_->hash != b.node_->hash || a.node_->rpn != b.node_->rpn)
        return false;
    return compareNodes(*a.node_, *b.node_) == 0;
}

std::strong_ordering operator<=>(const Regex &a, const Regex &b) noexcept {
    return compareNodes(*a.node_, *b.node_);
}

} // namespace rekit
