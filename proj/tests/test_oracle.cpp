#include "support.hpp"

#include "rekit/error.hpp"

#include <doctest.h>

using namespace testing;

using Words = std::set<std::string>;

TEST_CASE("enumerateRe") {
    CHECK(enumerateRe(re("(a+b)*a"), 2).renderedWords() == Words{"a", "aa", "ba"});
    CHECK(enumerateRe(re("@0"), 5).empty());
    CHECK(enumerateRe(re("@e"), 5).renderedWords() == Words{""});
    CHECK(enumerateRe(re("a*"), 3).renderedWords() == Words{"", "a", "aa", "aaa"});
    CHECK(enumerateRe(re("(ab)*"), 0).size() == 1);
    CHECK(enumerateRe(re("(a+b)*"), 9).size() == 1023);
}

TEST_CASE("enumerateNfa") {
    CHECK(enumerateNfa(positionAutomaton(re("a")), 3).renderedWords() == Words{"a"});
    CHECK(enumerateNfa(makeNfa(2, {{0, 'a', 1}}, {0}, {}), 4).empty());
    CHECK(enumerateNfa(pdAutomaton(re("(a+b)*a")), 2).renderedWords() == Words{"a", "aa", "ba"});
    CHECK(enumerateNfa(makeNfa(2, {{0, 'a', 1}}, {0, 1}, {1}), 3).renderedWords() == Words{"", "a"});
}

TEST_CASE("bounded language basics") {
    const BoundedLanguage l = enumerateRe(re("a+bc"), 3);
    CHECK(l.contains(std::vector<Symbol>{sym('b'), sym('c')}));
    CHECK_FALSE(l.contains(std::vector<Symbol>{sym('b')}));
    CHECK_FALSE(l.contains(std::vector<Symbol>{sym('a'), sym('a'), sym('a'), sym('a')}));
    CHECK(l.words() == std::set<Word>{{sym('a')}, {sym('b'), sym('c')}});
    CHECK(l.maxLength() == 3);
    CHECK_THROWS_AS(BoundedLanguage(10), Error);
    CHECK_THROWS_AS(enumerateRe(re("a"), 10), Error);
    CHECK_THROWS_AS(enumerateRe(Regex::letter(Symbol{200}), 2), Error);
}

TEST_CASE("equivalentUpTo") {
    CHECK(equivalentUpTo(re("(a+b)*a"), positionAutomaton(re("(a+b)*a")), 8));
    CHECK_FALSE(equivalentUpTo(re("a"), re("b"), 1));
    CHECK(equivalentUpTo(re("(@e+a)(@0+b)"), reduce(re("(@e+a)(@0+b)")), 6));
    CHECK(equivalentUpTo(re("(a*b*)*"), re("(a+b)*"), 9));
    CHECK_FALSE(equivalentUpTo(re("a*"), re("aa*"), 0));
}

TEST_CASE("enumeration agrees with backtracking matching") {
    std::mt19937_64 rng(41);
    const std::vector<Symbol> letters{sym('a'), sym('b')};
    for (int i = 0; i < 300; ++i) {
        const Regex r = randomRegex(rng, 1 + rng() % 20, 2);
        CAPTURE(render(r));
        const BoundedLanguage l = enumerateRe(r, 7);
        CHECK(l.words() == bruteLanguage(r, letters, 7));
        CHECK(enumerateNfa(minimize(determinize(positionAutomaton(r))).toNfa(), 7) == l);
    }
}

TEST_CASE("bruteCoarsestRightInvariant") {
    CHECK(bruteCoarsestRightInvariant(makeNfa(2, {}, {0}, {0, 1})) == Partition::single(2));
    CHECK(bruteCoarsestRightInvariant(makeNfa(2, {}, {0}, {1})) == Partition::identity(2));
    const Nfa minimal = minimize(determinize(positionAutomaton(re("(a+b)*ab")))).toNfa();
    CHECK(bruteCoarsestRightInvariant(minimal) == Partition::identity(minimal.numStates()));
    CHECK(bruteCoarsestRightInvariant(makeNfa(0, {}, {}, {})).numBlocks() == 0);
    CHECK_THROWS_AS(bruteCoarsestRightInvariant(makeNfa(9, {}, {0}, {})), Error);
}

TEST_CASE("the brute-force relation is the unique coarsest one") {
    // Every right-invariant partition must be finer than the result.
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + rng() % 4;
        NfaBuilder b({sym('a'), sym('b')}, n);
        for (State p = 0; p < n; ++p) {
            for (State q = 0; q < n; ++q)
                for (std::uint32_t l = 0; l < 2; ++l)
                    if (rng() % 3 == 0)
                        b.addLabelledTransition(p, l, q);
            if (rng() % 2)
                b.addFinal(p);
        }
        b.addInitial(0);
        const Nfa a = std::move(b).build();
        const Partition coarsest = bruteCoarsestRightInvariant(a);
        CHECK(isRightInvariant(a, coarsest));
        // Enumerate all partitions of up to 4 states via label vectors.
        std::vector<std::uint32_t> labels(n, 0);
        for (;;) {
            const Partition p(labels);
            if (isRightInvariant(a, p))
                CHECK(p.isFinerThan(coarsest));
            std::size_t k = 0;
            while (k < n && ++labels[k] == n)
                labels[k++] = 0;
            if (k == n)
                break;
        }
    }
}
