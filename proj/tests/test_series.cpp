#include <random>

#include "doctest.h"
#include "modgroup/series.hpp"

using namespace modgroup;

namespace {

UniSeries random_uni(std::mt19937& rng, std::size_t order, bool rational) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, rational ? 7 : 1);
    std::vector<Rational> c(order);
    for (auto& q : c) q = make_rational(num(rng), den(rng));
    return UniSeries::from_coefficients(std::move(c));
}

BiSeries random_bi(std::mt19937& rng, std::size_t order) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<unsigned> deg(0, static_cast<unsigned>(order - 1));
    BiSeries s(order);
    for (int t = 0; t < 24; ++t) {
        unsigned i = deg(rng), j = deg(rng);
        if (i + j >= order) continue;
        s = s + BiSeries::monomial(i, j, num(rng), order);
    }
    return s;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("basic products") {
    UniSeries one_plus = UniSeries::polynomial({1, 1}, 8);
    UniSeries one_minus = UniSeries::polynomial({1, -1}, 8);
    UniSeries prod = one_plus * one_minus;
    CHECK(prod.coefficient(0) == 1);
    CHECK(prod.coefficient(1) == 0);
    CHECK(prod.coefficient(2) == -1);
    for (std::size_t i = 3; i < 8; ++i) CHECK(prod.coefficient(i) == 0);

    CHECK((UniSeries(8) * one_plus).is_zero());

    UniSeries geometric = invert(one_minus);
    for (std::size_t i = 0; i < 8; ++i) CHECK(geometric.coefficient(i) == 1);
    CHECK((geometric * one_minus) == UniSeries::one(8));
}

TEST_CASE("invert is a two-sided inverse, with and without denominators") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        UniSeries a = random_uni(rng, 24, trial % 2 == 0);
        if (sgn(a.coefficient(0)) == 0)
            a = a + UniSeries::one(24);
        if (sgn(a.coefficient(0)) == 0) continue;
        CHECK(a * invert(a) == UniSeries::one(24));
        CHECK(invert(a) * a == UniSeries::one(24));
    }
    CHECK_THROWS_AS(invert(UniSeries(5)), std::domain_error);
}

TEST_CASE("ring axioms on random univariate triples, order 32") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        UniSeries a = random_uni(rng, 32, true);
        UniSeries b = random_uni(rng, 32, true);
        UniSeries c = random_uni(rng, 32, false);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == UniSeries(32));
    }
}

TEST_CASE("sqrt_unit") {
    CHECK(sqrt_unit(UniSeries::one(16)) == UniSeries::one(16));

    UniSeries square = UniSeries::polynomial({1, 2, 1}, 16);  // (1+x)^2
    CHECK(sqrt_unit(square) == UniSeries::polynomial({1, 1}, 16));

    // 1/sqrt(1-4x) has the central binomial coefficients.
    UniSeries central = invert(sqrt_unit(UniSeries::polynomial({1, -4}, 16)));
    for (unsigned n = 0; n < 16; ++n)
        CHECK(central.coefficient(n) == Rational(binomial(2 * n, n)));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        UniSeries a = random_uni(rng, 20, true);
        a = a - UniSeries::constant(a.coefficient(0), 20) + UniSeries::one(20);
        UniSeries r = sqrt_unit(a);
        CHECK(r * r == a);
    }

    CHECK_THROWS_AS(sqrt_unit(UniSeries::polynomial({4, 1}, 8)), std::domain_error);
}

TEST_CASE("coefficient access is bounds-checked") {
    UniSeries a = UniSeries::one(4);
    CHECK_THROWS_AS(a.coefficient(4), std::domain_error);
    BiSeries b = BiSeries::one(4);
    CHECK_THROWS_AS(b.coefficient(2, 2), std::domain_error);
    CHECK(b.coefficient(1, 2) == 0);
}

TEST_CASE("bivariate arithmetic and inversion") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 8; ++trial) {
        BiSeries a = random_bi(rng, 12);
        BiSeries b = random_bi(rng, 12);
        BiSeries c = random_bi(rng, 12);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);

        BiSeries unit = a - BiSeries::constant(a.coefficient(0, 0), 12) + BiSeries::one(12);
        CHECK(unit * invert(unit) == BiSeries::one(12));
    }
    CHECK_THROWS_AS(invert(BiSeries(6)), std::domain_error);

    // 1/(1-x^3) over two variables.
    BiSeries geo = invert(BiSeries::polynomial({{0, 0, 1}, {3, 0, -1}}, 13));
    for (unsigned k = 0; k < 13; k += 3) CHECK(geo.coefficient(k, 0) == 1);
    CHECK(geo.coefficient(1, 0) == 0);
    CHECK(geo.coefficient(0, 2) == 0);
}

TEST_CASE("substitute_x") {
    // x^3 with denominator 1-y^2 picks up the binomial tail of (1-y^2)^-3.
    BiSeries x3 = BiSeries::monomial(3, 0, 1, 12);
    BiSeries den = BiSeries::polynomial({{0, 0, 1}, {0, 2, -1}}, 12);
    BiSeries subst = substitute_x(x3, 1, den);
    CHECK(subst.coefficient(3, 0) == 1);
    CHECK(subst.coefficient(3, 2) == 3);
    CHECK(subst.coefficient(3, 4) == 6);
    CHECK(subst.coefficient(3, 6) == 10);
    CHECK(subst.coefficient(3, 1) == 0);

    // Denominator 1 is the identity map.
    std::mt19937 rng(9);
    BiSeries a = random_bi(rng, 12);
    CHECK(substitute_x(a, 1, BiSeries::one(12)) == a);

    CHECK_THROWS_AS(substitute_x(a, 0, den), std::domain_error);
    CHECK_THROWS_AS(substitute_x(a, 1, x3), std::domain_error);
}

TEST_CASE("diagonal") {
    BiSeries m = BiSeries::monomial(3, 2, 1, 8);
    UniSeries d = diagonal(m);
    CHECK(d.coefficient(5) == 1);
    CHECK(d.coefficient(3) == 0);
    CHECK(diagonal(BiSeries::one(8)) == UniSeries::one(8));
}

TEST_CASE("truncation and support helpers") {
    BiSeries m = BiSeries::polynomial({{0, 0, 1}, {3, 2, 4}, {6, 0, -1}}, 10);
    CHECK(m.truncated(5).terms().size() == 1);
    CHECK(m.supported_on(3, 2));
    CHECK_FALSE((m + BiSeries::monomial(1, 0, 1, 10)).supported_on(3, 2));
    CHECK(m.is_integral());
    CHECK_FALSE((make_rational(1, 2) * m).is_integral());

    UniSeries u = UniSeries::polynomial({1, 2, 3, 4}, 4);
    CHECK_THROWS_AS(u.truncated(5), std::domain_error);
    CHECK(u.truncated(2) == UniSeries::polynomial({1, 2}, 2));
    CHECK(u.shifted(2) == UniSeries::polynomial({0, 0, 1, 2}, 4));
}

TEST_CASE("operations truncate to the smaller order") {
    UniSeries a = UniSeries::polynomial({1, 1, 1, 1, 1, 1}, 6);
    UniSeries b = UniSeries::polynomial({1, 1}, 3);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
}

}  // TEST_SUITE
