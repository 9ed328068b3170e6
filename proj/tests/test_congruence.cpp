#include "doctest.h"
#include "modgroup/congruence.hpp"
#include "modgroup/enumeration.hpp"

using namespace modgroup;

TEST_SUITE("congruence") {

TEST_CASE("primality by trial division") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(4));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));  // 7 * 13
    CHECK(is_prime(499));
}

TEST_CASE("built-in sequences") {
    BuiltinSequences seqs = builtin_sequences(30);
    CHECK(seqs.p[5] == 15);
    CHECK(seqs.p[0] == 0);
    CHECK(seqs.p[1] == 0);
    CHECK(seqs.p[2] == 1);
    CHECK(seqs.j[3] == 18);
    CHECK(seqs.j[0] == -1);
    CHECK(seqs.t[7] == 14);
    CHECK(seqs.t[19] == 16473);
}

TEST_CASE("t-sequence divisibility for small primes") {
    BuiltinSequences seqs = builtin_sequences(30);
    CongruenceReport report = fermat_check(seqs.t, 5, 19, 1);
    CHECK(report.clean());
    CHECK(std::string(report.property()) == "Fermat");

    // 2 and 3 genuinely fail: t(2) = t(3) = 1.
    CongruenceReport small = fermat_check(seqs.t, 2, 3, 1);
    REQUIRE(small.failures.size() == 2);
    CHECK(small.failures[0].prime == 2);
    CHECK(small.failures[0].residue == 1);
    CHECK(small.failures[1].prime == 3);
    CHECK(small.failures[1].residue == 1);
}

TEST_CASE("powers of two minus one") {
    BuiltinSequences seqs = builtin_sequences(100);
    CHECK(fermat_check(seqs.p, 3, 97, 1).clean());
}

TEST_CASE("central binomials have the stronger divisibility") {
    BuiltinSequences seqs = builtin_sequences(102);
    CongruenceReport report = fermat_check(seqs.j, 2, 101, 2);
    CHECK(report.clean());
    CHECK(std::string(report.property()) == "Wieferich");
}

TEST_CASE("brute-force counts pass the same sweep") {
    auto counts = count_identity_upto(19);
    CongruenceReport report = fermat_check(counts, 5, 19, 1);
    CHECK(report.clean());
}

TEST_CASE("argument validation") {
    BuiltinSequences seqs = builtin_sequences(10);
    CHECK_THROWS_AS(fermat_check(seqs.t, 2, 10, 1), std::domain_error);
    CHECK_THROWS_AS(fermat_check(seqs.t, 2, 7, 3), std::invalid_argument);
}

}  // TEST_SUITE
