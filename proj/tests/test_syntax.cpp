#include "support.hpp"

#include "rekit/error.hpp"

#include <doctest.h>

using namespace testing;

namespace {

Regex a() { return Regex::letter(sym('a')); }
Regex b() { return Regex::letter(sym('b')); }

} // namespace

TEST_CASE("parse follows operator precedence") {
    CHECK(re("(a+b)*a") == Regex::concat(Regex::star(Regex::alt(a(), b())), a()));
    CHECK(re("@e") == Regex::epsilon());
    CHECK(re("@0") == Regex::empty());
    CHECK(re("a(b+@e)") == Regex::concat(a(), Regex::alt(b(), Regex::epsilon())));
    CHECK(re("a+bc*") == Regex::alt(a(), Regex::concat(b(), Regex::star(Regex::letter(sym('c'))))));
    CHECK(re(" a  b ") == Regex::concat(a(), b()));
    CHECK(re("a**") == Regex::star(Regex::star(a())));
}

TEST_CASE("concatenation and union associate to the left") {
    CHECK(re("abc") == Regex::concat(Regex::concat(a(), b()), Regex::letter(sym('c'))));
    CHECK(re("a+b+c") == Regex::alt(Regex::alt(a(), b()), Regex::letter(sym('c'))));
}

TEST_CASE("indexed letters") {
    const Regex r = re("a_1a_12");
    CHECK(r.left().symbol() == Symbol{27});
    CHECK(r.right().symbol() == Symbol{38});
    CHECK(render(r) == "a_1a_12");
    CHECK(symbolFromName("a_3") == standardLetter(2, 30));
    CHECK(symbolName(standardLetter(0, 26)) == "a");
    CHECK(standardAlphabet(27).size() == 27);
    CHECK_THROWS_AS(symbolFromName("A"), Error);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(re("a+"), ParseError);
    CHECK_THROWS_AS(re("(a"), ParseError);
    CHECK_THROWS_AS(re("a)"), ParseError);
    CHECK_THROWS_AS(re("*a"), ParseError);
    CHECK_THROWS_AS(re("A"), ParseError);
    CHECK_THROWS_AS(re("@x"), ParseError);
    CHECK_THROWS_AS(re(""), ParseError);
    try {
        re("ab+)");
        FAIL("no error");
    } catch (const ParseError &e) {
        CHECK(e.position() == 3);
    }
    CHECK_THROWS_AS(parse("abc", Alphabet{sym('a'), sym('b')}), Error);
    CHECK_NOTHROW(parse("ab", Alphabet{sym('a'), sym('b')}));
}

TEST_CASE("render uses minimal parentheses") {
    CHECK(render(re("(a+b)*a")) == "(a+b)*a");
    CHECK(render(Regex::epsilon()) == "@e");
    CHECK(render(Regex::star(Regex::star(a()))) == "a**");
    CHECK(render(re("((a))((b))")) == "ab");
    CHECK(render(re("a(bc)")) == "a(bc)");
    CHECK(render(re("a+(b+c)")) == "a+(b+c)");
    CHECK(render(re("(ab)*")) == "(ab)*");
}

TEST_CASE("measures") {
    CHECK(measures(re("(a+b)*a")) == Measures{7, 3, 6});
    CHECK(measures(re("@e")) == Measures{1, 0, 1});
    CHECK(measures(re("a*")) == Measures{2, 1, 2});
    CHECK(ordinarySize(re("a(bc)")) == 5);
    CHECK(alphabetOf(re("ca+c")) == Alphabet{sym('a'), sym('c')});
}

TEST_CASE("nullable") {
    CHECK_FALSE(nullable(re("(a+b)*a")));
    CHECK(nullable(re("a*")));
    CHECK(nullable(re("@e+a")));
    CHECK_FALSE(nullable(re("@0")));
    CHECK_FALSE(nullable(re("@0*a")));
}

TEST_CASE("reduce rules") {
    CHECK(reduce(Regex::concat(Regex::epsilon(), a())) == a());
    CHECK(reduce(Regex::concat(a(), Regex::epsilon())) == a());
    CHECK(reduce(Regex::alt(Regex::empty(), Regex::star(a()))) == Regex::star(a()));
    CHECK(reduce(Regex::alt(Regex::epsilon(), Regex::star(a()))) == Regex::star(a()));
    CHECK(reduce(Regex::star(Regex::star(a()))) == Regex::star(a()));
    CHECK(reduce(re("@0a")) == Regex::empty());
    CHECK(reduce(re("a@0")) == Regex::empty());
    CHECK(reduce(re("@0*")) == Regex::epsilon());
    CHECK(reduce(re("@e*")) == Regex::epsilon());
    CHECK(reduce(re("@e+a")) == re("@e+a"));
    CHECK(reduce(re("(@e(a+@0))**b")) == re("a*b"));
}

TEST_CASE("isReduced") {
    CHECK(isReduced(re("(a+b)*a")));
    CHECK_FALSE(isReduced(Regex::concat(Regex::epsilon(), a())));
    CHECK(isReduced(Regex::alt(Regex::epsilon(), a())));
    CHECK(isReduced(re("@0")));
    CHECK_FALSE(isReduced(re("a**")));
}

TEST_CASE("star normal form") {
    CHECK_FALSE(isSnf(re("(a*b*)*")));
    CHECK(isSnf(re("(a+b)*")));
    CHECK(isSnf(re("ab")));
    CHECK_FALSE(isSnf(re("(a+@e)*")));
    CHECK(isSnf(re("(a*b)*")));
    CHECK_FALSE(isSnf(re("(a+b*)*")));
    CHECK_FALSE(isSnf(re("c(a*b*)*")));
    CHECK(isSnf(re("(ab)*")));

    CHECK(toSnf(re("(a*b*)*")) == re("(a+b)*"));
    CHECK(toSnf(re("a*")) == re("a*"));
    CHECK(toSnf(re("(a+b)*a")) == re("(a+b)*a"));
    CHECK(toSnf(re("a**")) == re("a*"));
}

TEST_CASE("marking") {
    const MarkedRegex m = mark(re("(a+b)*a"));
    CHECK(m.positions() == 3);
    CHECK(m.symbols == std::vector<Symbol>{sym('a'), sym('b'), sym('a')});
    CHECK(m.marked == Regex::concat(Regex::star(Regex::alt(Regex::letter(Symbol{1}), Regex::letter(Symbol{2}))),
                                    Regex::letter(Symbol{3})));
    CHECK(m.symbolAt(3) == sym('a'));
    CHECK(unmark(m) == re("(a+b)*a"));
    CHECK(mark(re("@e")).positions() == 0);
    CHECK(mark(re("aa")).marked == re("bc"));
}

TEST_CASE("structural equality, order and hashing") {
    CHECK(re("a+b") != re("b+a"));
    CHECK(re("(a+b)c") == re("(a+b)c"));
    CHECK(RegexHash{}(re("(a+b)c")) == RegexHash{}(re("(a+b)c")));
    CHECK((re("a") < re("b")) != (re("b") < re("a")));
    CHECK(Regex() == Regex::empty());
}

TEST_CASE("syntax properties on random expressions") {
    std::mt19937_64 rng(11);
    const std::vector<Symbol> letters{sym('a'), sym('b')};
    for (int i = 0; i < 400; ++i) {
        const Regex r = randomRegex(rng, 1 + rng() % 25, 2);
        CAPTURE(render(r));
        CHECK(parse(render(r)) == r);
        const Measures m = measures(r);
        CHECK(m.alph <= m.rpn);
        CHECK(m.alph <= m.size);
        CHECK(m.rpn == r.rpn());

        const Regex red = reduce(r);
        CHECK(reduce(red) == red);
        CHECK(isReduced(red));
        CHECK(isReduced(r) == (red == r));
        CHECK(red.alph() <= r.alph());
        CHECK(red.rpn() <= r.rpn());
        CHECK(enumerateRe(red, 6) == enumerateRe(r, 6));

        const Regex snf = toSnf(red);
        CHECK(isSnf(snf));
        CHECK(snf.alph() == red.alph());
        CHECK(enumerateRe(snf, 6) == enumerateRe(red, 6));
        CHECK(unmark(mark(r)) == r);
    }
}

TEST_CASE("reduce preserves languages up to length 8") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 150; ++i) {
        const Regex r = randomRegex(rng, 1 + rng() % 25, 2);
        CAPTURE(render(r));
        CHECK(equivalentUpTo(r, reduce(r), 8));
    }
}
