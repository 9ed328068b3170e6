#include <random>

#include "doctest.h"
#include "modgroup/matrices.hpp"

using namespace modgroup;

namespace {

Word random_word(std::mt19937& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> letter_dist(0, 1);
    Word w;
    std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i)
        w.push_back(letter_dist(rng) == 0 ? Letter::U : Letter::S);
    return w;
}

}  // namespace

TEST_SUITE("matrices") {

TEST_CASE("generator matrices") {
    ProjectiveMatrix u = letter_matrix(Letter::U);
    CHECK(u.a() == 0);
    CHECK(u.b() == 1);
    CHECK(u.c() == -1);
    CHECK(u.d() == 1);

    ProjectiveMatrix s = letter_matrix(Letter::S);
    CHECK(s.a() == 0);
    CHECK(s.b() == 1);
    CHECK(s.c() == -1);
    CHECK(s.d() == 0);

    CHECK(multiply(s, s).is_identity());
    CHECK(multiply(u, multiply(u, u)).is_identity());
    CHECK_FALSE(multiply(u, u).is_identity());
}

TEST_CASE("constructor checks the determinant") {
    CHECK_THROWS_AS(ProjectiveMatrix(1, 0, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(ProjectiveMatrix(0, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("sign normalization picks the first nonzero entry positive") {
    // -I normalizes to I.
    ProjectiveMatrix m(-1, 0, 0, -1);
    CHECK(m.is_identity());
    ProjectiveMatrix n(0, -1, 1, 0);
    CHECK(n.b() == 1);
    CHECK(n.c() == -1);

    // Idempotent: rebuilding from normalized entries changes nothing.
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        ProjectiveMatrix a = evaluate(random_word(rng, 14));
        CHECK(ProjectiveMatrix(a.a(), a.b(), a.c(), a.d()) == a);
    }
}

TEST_CASE("multiply neutral element and associativity on random words") {
    std::mt19937 rng(20240811);
    ProjectiveMatrix identity;
    for (int i = 0; i < 1000; ++i) {
        ProjectiveMatrix a = evaluate(random_word(rng, 12));
        ProjectiveMatrix b = evaluate(random_word(rng, 12));
        ProjectiveMatrix c = evaluate(random_word(rng, 12));
        CHECK(multiply(identity, a) == a);
        CHECK(multiply(a, identity) == a);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("evaluate on the known identity words") {
    CHECK(evaluate(Word{}).is_identity());
    CHECK(evaluate(Word::parse("USUUUSUU")).is_identity());
    CHECK(evaluate(Word::parse("USUUUSUSUUUSSSU")).is_identity());
    CHECK_FALSE(evaluate(Word::parse("US")).is_identity());
}

TEST_CASE("is_identity examples") {
    CHECK(is_identity(Word::parse("SS")));
    CHECK_FALSE(is_identity(Word::parse("U")));
    CHECK(is_identity(Word::parse("SUUUS")));
}

TEST_CASE("normal form examples") {
    CHECK(normal_form(Word::parse("SS")).empty());
    CHECK(normal_form(Word::parse("US")) == Word::parse("US"));
    CHECK(normal_form(Word::parse("USUUUSUU")).empty());
    // Cancellations cascade across the deleted factor.
    CHECK(normal_form(Word::parse("UUSSU")).empty());
    CHECK(normal_form(Word::parse("USSUUS")) == Word::parse("S"));
}

TEST_CASE("normal form empty iff identity, all words up to length 16") {
    std::vector<Letter> letters;
    std::size_t checked = 0;
    auto rec = [&](auto&& self, const ProjectiveMatrix& m) -> void {
        Word w{letters};
        ++checked;
        CHECK(m.is_identity() == normal_form(w).empty());
        if (letters.size() == 16) return;
        for (Letter l : {Letter::U, Letter::S}) {
            letters.push_back(l);
            self(self, multiply(m, letter_matrix(l)));
            letters.pop_back();
        }
    };
    rec(rec, ProjectiveMatrix::identity());
    CHECK(checked == (1u << 17) - 1);
}

TEST_CASE("normal form is a fixed point") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Word w = random_word(rng, 20);
        Word nf = normal_form(w);
        CHECK(normal_form(nf) == nf);
        CHECK_FALSE(nf.contains_ss());
        CHECK(evaluate(nf) == evaluate(w));
    }
}

TEST_CASE("rotations") {
    auto r = rotations(Word::parse("US"));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == Word::parse("US"));
    CHECK(r[1] == Word::parse("SU"));

    auto ru = rotations(Word::parse("UUU"));
    REQUIRE(ru.size() == 3);
    for (const Word& w : ru) CHECK(w == Word::parse("UUU"));

    auto re = rotations(Word{});
    REQUIRE(re.size() == 1);
    CHECK(re[0].empty());

    for (const Word& w : rotations(Word::parse("SUUUS"))) CHECK(is_identity(w));
}

TEST_CASE("rotation closure for identity words up to length 10") {
    std::vector<Letter> letters;
    auto rec = [&](auto&& self, const ProjectiveMatrix& m) -> void {
        if (m.is_identity() && !letters.empty())
            for (const Word& r : rotations(Word{letters})) CHECK(is_identity(r));
        if (letters.size() == 10) return;
        for (Letter l : {Letter::U, Letter::S}) {
            letters.push_back(l);
            self(self, multiply(m, letter_matrix(l)));
            letters.pop_back();
        }
    };
    rec(rec, ProjectiveMatrix::identity());
}

TEST_CASE("primitive identity words") {
    CHECK(is_primitive_identity(Word::parse("SUUUS")));
    CHECK_FALSE(is_primitive_identity(Word::parse("SSSS")));
    CHECK(is_primitive_identity(Word::parse("UUU")));
    CHECK_FALSE(is_primitive_identity(Word{}));

    // Primitivity implies identity, all words up to length 12.
    std::vector<Letter> letters;
    auto rec = [&](auto&& self) -> void {
        Word w{letters};
        if (is_primitive_identity(w)) CHECK(is_identity(w));
        if (letters.size() == 12) return;
        for (Letter l : {Letter::U, Letter::S}) {
            letters.push_back(l);
            self(self);
            letters.pop_back();
        }
    };
    rec(rec);
}

TEST_CASE("word parsing rejects other characters") {
    CHECK_THROWS_AS(Word::parse("USA"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("u"), std::invalid_argument);
}

}  // TEST_SUITE
