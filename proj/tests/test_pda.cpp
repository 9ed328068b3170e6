#include "doctest.h"
#include "modgroup/matrices.hpp"
#include "modgroup/pda.hpp"

using namespace modgroup;

namespace {

PdaConfiguration config(std::initializer_list<StackSymbol> top_first) {
    return PdaConfiguration::from_top_first(std::vector<StackSymbol>(top_first));
}

}  // namespace

TEST_SUITE("pda") {

TEST_CASE("all eight transitions") {
    using SS = StackSymbol;
    struct Case {
        std::initializer_list<SS> before;
        Letter letter;
        std::initializer_list<SS> after;
    };
    const Case cases[] = {
        {{SS::Bottom}, Letter::U, {SS::OneU, SS::Bottom}},
        {{SS::OneU, SS::Bottom}, Letter::U, {SS::TwoU, SS::Bottom}},
        {{SS::TwoU, SS::Bottom}, Letter::U, {SS::Bottom}},
        {{SS::OneS, SS::Bottom}, Letter::U, {SS::OneU, SS::OneS, SS::Bottom}},
        {{SS::Bottom}, Letter::S, {SS::OneS, SS::Bottom}},
        {{SS::OneU, SS::Bottom}, Letter::S, {SS::OneS, SS::OneU, SS::Bottom}},
        {{SS::TwoU, SS::Bottom}, Letter::S, {SS::OneS, SS::TwoU, SS::Bottom}},
        {{SS::OneS, SS::Bottom}, Letter::S, {SS::Bottom}},
    };
    for (const Case& c : cases) {
        CHECK(step(config(c.before), c.letter) == config(c.after));
    }
}

TEST_CASE("apply and revert are inverse") {
    PdaConfiguration c;
    PdaConfiguration original = c;
    Word w = Word::parse("USUUSSUUUS");
    std::vector<PdaConfiguration::Undo> undos;
    for (Letter l : w.letters()) undos.push_back(c.apply(l));
    for (std::size_t i = undos.size(); i-- > 0;) c.revert(undos[i]);
    CHECK(c == original);
}

TEST_CASE("accepts examples") {
    CHECK(accepts(Word::parse("SS")));
    CHECK(accepts(Word::parse("USUUUSUU")));
    CHECK_FALSE(accepts(Word::parse("SU")));
    CHECK(accepts(Word{}));
}

TEST_CASE("agrees with the matrix oracle on all words up to length 12") {
    std::vector<Letter> letters;
    PdaConfiguration c;
    auto rec = [&](auto&& self, const ProjectiveMatrix& m) -> void {
        CHECK(c.at_bottom() == m.is_identity());
        if (letters.size() == 12) return;
        for (Letter l : {Letter::U, Letter::S}) {
            letters.push_back(l);
            auto undo = c.apply(l);
            self(self, multiply(m, letter_matrix(l)));
            c.revert(undo);
            letters.pop_back();
        }
    };
    rec(rec, ProjectiveMatrix::identity());
}

TEST_CASE("stack decodes to the normal form of every prefix, length <= 10") {
    CHECK(stack_to_normal_form(PdaConfiguration{}).empty());
    CHECK(stack_to_normal_form(config({StackSymbol::OneU, StackSymbol::OneS,
                                       StackSymbol::Bottom})) == Word::parse("SU"));
    CHECK(stack_to_normal_form(config({StackSymbol::TwoU, StackSymbol::Bottom})) ==
          Word::parse("UU"));

    std::vector<Letter> letters;
    PdaConfiguration c;
    auto rec = [&](auto&& self) -> void {
        CHECK(stack_to_normal_form(c) == normal_form(Word{letters}));
        if (letters.size() == 10) return;
        for (Letter l : {Letter::U, Letter::S}) {
            letters.push_back(l);
            auto undo = c.apply(l);
            self(self);
            c.revert(undo);
            letters.pop_back();
        }
    };
    rec(rec);
}

TEST_CASE("stack never codes S^2 or U^3, runs up to length 12") {
    std::vector<Letter> letters;
    PdaConfiguration c;
    auto rec = [&](auto&& self) -> void {
        const auto& syms = c.symbols();
        for (std::size_t i = 2; i < syms.size(); ++i) {
            bool prev_u = syms[i - 1] == StackSymbol::OneU || syms[i - 1] == StackSymbol::TwoU;
            bool cur_u = syms[i] == StackSymbol::OneU || syms[i] == StackSymbol::TwoU;
            CHECK_FALSE((prev_u && cur_u));
            CHECK_FALSE((syms[i - 1] == StackSymbol::OneS && syms[i] == StackSymbol::OneS));
        }
        if (letters.size() == 12) return;
        for (Letter l : {Letter::U, Letter::S}) {
            letters.push_back(l);
            auto undo = c.apply(l);
            self(self);
            c.revert(undo);
            letters.pop_back();
        }
    };
    rec(rec);
}

TEST_CASE("the nine grammar productions") {
    const auto& g = grammar();
    REQUIRE(g.size() == 9);

    CHECK(g[2].head == 2);
    REQUIRE(g[2].body.size() == 1);
    CHECK(g[2].body[0] == GrammarSymbol::u());

    CHECK(g[5].head == 1);
    REQUIRE(g[5].body.size() == 3);
    CHECK(g[5].body[0] == GrammarSymbol::s());
    CHECK(g[5].body[1] == GrammarSymbol::nt(3));
    CHECK(g[5].body[2] == GrammarSymbol::nt(1));

    CHECK(g[8].head == 0);
    REQUIRE(g[8].body.size() == 1);
    CHECK(g[8].body[0] == GrammarSymbol::end());

    // Heads follow the transition table: N0, N1, N2, N3, N0, N1, N2, N3, N0.
    const int heads[] = {0, 1, 2, 3, 0, 1, 2, 3, 0};
    for (int i = 0; i < 9; ++i) CHECK(g[i].head == heads[i]);
}

TEST_CASE("configuration invariants are validated") {
    CHECK_THROWS_AS(PdaConfiguration::from_top_first({StackSymbol::OneU}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PdaConfiguration::from_top_first(
                        {StackSymbol::Bottom, StackSymbol::OneU, StackSymbol::Bottom}),
                    std::invalid_argument);
}

}  // TEST_SUITE
