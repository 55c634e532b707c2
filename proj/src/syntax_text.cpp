// Surface syntax: tokenizer, recursive-descent parser, printer, measures.

#include "rekit/error.hpp"
#include "rekit/syntax.hpp"

#include <algorithm>
#include <cctype>

namespace rekit {

namespace {

enum class TokenKind { Letter, Epsilon, Empty, Plus, Star, LParen, RParen, End };

struct Token {
    TokenKind kind;
    Symbol symbol;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const std::size_t start = i;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        switch (c) {
        case '+': out.push_back({TokenKind::Plus, {}, start}); ++i; continue;
        case '*': out.push_back({TokenKind::Star, {}, start}); ++i; continue;
        case '(': out.push_back({TokenKind::LParen, {}, start}); ++i; continue;
        case ')': out.push_back({TokenKind::RParen, {}, start}); ++i; continue;
        case '@':
            if (i + 1 < text.size() && text[i + 1] == 'e') {
                out.push_back({TokenKind::Epsilon, {}, start});
            } else if (i + 1 < text.size() && text[i + 1] == '0') {
                out.push_back({TokenKind::Empty, {}, start});
            } else {
                throw ParseError("unknown token '@'", start);
            }
            i += 2;
            continue;
        default:
            break;
        }
        if (c >= 'a' && c <= 'z') {
            if (c == 'a' && i + 1 < text.size() && text[i + 1] == '_') {
                std::size_t j = i + 2;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                    ++j;
                if (j == i + 2)
                    throw ParseError("expected digits after 'a_'", j);
                try {
                    out.push_back({TokenKind::Letter, symbolFromName(text.substr(i, j - i)), start});
                } catch (const Error &) {
                    throw ParseError("letter index too large", start);
                }
                i = j;
            } else {
                out.push_back({TokenKind::Letter, Symbol{static_cast<std::uint32_t>(c - 'a')}, start});
                ++i;
            }
            continue;
        }
        throw ParseError(std::string("unknown token '") + c + "'", start);
    }
    out.push_back({TokenKind::End, {}, text.size()});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const std::optional<Alphabet> &alphabet)
        : tokens_(std::move(tokens)), alphabet_(alphabet) {}

    Regex parseAll() {
        Regex r = expr();
        if (peek().kind != TokenKind::End)
            throw ParseError("unexpected token", peek().offset);
        return r;
    }

private:
    const Token &peek() const { return tokens_[pos_]; }

    static bool startsAtom(TokenKind k) {
        return k == TokenKind::Letter || k == TokenKind::Epsilon || k == TokenKind::Empty ||
               k == TokenKind::LParen;
    }

    Regex expr() {
        Regex r = term();
        while (peek().kind == TokenKind::Plus) {
            ++pos_;
            r = Regex::alt(std::move(r), term());
        }
        return r;
    }

    Regex term() {
        Regex r = factor();
        while (startsAtom(peek().kind))
            r = Regex::concat(std::move(r), factor());
        return r;
    }

    Regex factor() {
        Regex r = atom();
        while (peek().kind == TokenKind::Star) {
            ++pos_;
            r = Regex::star(std::move(r));
        }
        return r;
    }

    Regex atom() {
        const Token &t = peek();
        switch (t.kind) {
        case TokenKind::Letter:
            if (alphabet_ && !std::binary_search(alphabet_->begin(), alphabet_->end(), t.symbol))
                throw Error("symbol '" + symbolName(t.symbol) + "' not in the declared alphabet");
            ++pos_;
            return Regex::letter(t.symbol);
        case TokenKind::Epsilon:
            ++pos_;
            return Regex::epsilon();
        case TokenKind::Empty:
            ++pos_;
            return Regex::empty();
        case TokenKind::LParen: {
            ++pos_;
            Regex r = expr();
            if (peek().kind != TokenKind::RParen)
                throw ParseError("expected ')'", peek().offset);
            ++pos_;
            return r;
        }
        default:
            throw ParseError(t.kind == TokenKind::End ? "unexpected end of input" : "expected an atom",
                             t.offset);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const std::optional<Alphabet> &alphabet_;
};

// Binding strength used for minimal parenthesization.
int precedence(const Regex &r) {
    switch (r.kind()) {
    case RegexKind::Union: return 0;
    case RegexKind::Concat: return 1;
    case RegexKind::Star: return 2;
    default: return 3;
    }
}

// Emits the rendering one symbol at a time; `sink(text)` is called once per
// symbol of the ordinary length.
template <typename Sink> void emit(const Regex &r, Sink &sink) {
    auto wrapped = [&sink](const Regex &sub, bool parens) {
        if (parens)
            sink("(");
        emit(sub, sink);
        if (parens)
            sink(")");
    };
    switch (r.kind()) {
    case RegexKind::Empty: sink("@0"); break;
    case RegexKind::Epsilon: sink("@e"); break;
    case RegexKind::Letter: sink(symbolName(r.symbol())); break;
    case RegexKind::Union:
        wrapped(r.left(), false);
        sink("+");
        wrapped(r.right(), precedence(r.right()) <= 0);
        break;
    case RegexKind::Concat:
        wrapped(r.left(), precedence(r.left()) < 1);
        wrapped(r.right(), precedence(r.right()) <= 1);
        break;
    case RegexKind::Star:
        wrapped(r.child(), precedence(r.child()) < 2);
        sink("*");
        break;
    }
}

void collectLetters(const Regex &r, Alphabet &out) {
    switch (r.kind()) {
    case RegexKind::Letter: out.push_back(r.symbol()); break;
    case RegexKind::Union:
    case RegexKind::Concat:
        collectLetters(r.left(), out);
        collectLetters(r.right(), out);
        break;
    case RegexKind::Star: collectLetters(r.child(), out); break;
    default: break;
    }
}

} // namespace

Regex parse(std::string_view text, const std::optional<Alphabet> &alphabet) {
    Parser parser(tokenize(text), alphabet);
    return parser.parseAll();
}

std::string render(const Regex &r) {
    std::string out;
    auto sink = [&out](const std::string &s) { out += s; };
    emit(r, sink);
    return out;
}

std::size_t ordinarySize(const Regex &r) {
    std::size_t n = 0;
    auto sink = [&n](const std::string &) { ++n; };
    emit(r, sink);
    return n;
}

Measures measures(const Regex &r) { return {ordinarySize(r), r.alph(), r.rpn()}; }

Alphabet alphabetOf(const Regex &r) {
    Alphabet out;
    collectLetters(r, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace rekit
