#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "modgroup.h"

namespace {

std::string take_string(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    mg_string_free(s);
    return out;
}

std::vector<std::string> sequence_values(mg_sequence* seq) {
    std::vector<std::string> out;
    for (size_t row = 0; row < mg_sequence_rows(seq); ++row) {
        char* v = nullptr;
        REQUIRE(mg_sequence_value(seq, row, &v) == MG_OK);
        out.push_back(take_string(v));
    }
    return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("status messages and version") {
    CHECK(std::string(mg_status_message(MG_OK)) == "ok");
    CHECK(mg_status_message(MG_ERROR_BUDGET) != nullptr);
    CHECK(std::string(mg_version()) == "0.1.0");
}

TEST_CASE("word predicates") {
    int result = -1;
    CHECK(mg_word_is_identity("USUUUSUU", &result) == MG_OK);
    CHECK(result == 1);
    CHECK(mg_word_is_identity("SU", &result) == MG_OK);
    CHECK(result == 0);
    CHECK(mg_pda_accepts("USUUUSUU", &result) == MG_OK);
    CHECK(result == 1);
    CHECK(mg_word_is_primitive("SUUUS", &result) == MG_OK);
    CHECK(result == 1);
    CHECK(mg_word_is_primitive("SSSS", &result) == MG_OK);
    CHECK(result == 0);

    CHECK(mg_word_is_identity("UXS", &result) == MG_ERROR_ARGUMENT);
    CHECK(mg_word_is_identity(nullptr, &result) == MG_ERROR_ARGUMENT);
    CHECK(mg_word_is_identity("US", nullptr) == MG_ERROR_ARGUMENT);

    char* nf = nullptr;
    CHECK(mg_word_normal_form("USSUUS", &nf) == MG_OK);
    CHECK(take_string(nf) == "S");
    CHECK(mg_word_normal_form("", &nf) == MG_OK);
    CHECK(take_string(nf).empty());
}

TEST_CASE("identity sequence via all three methods") {
    const std::vector<std::string> expect = {"1", "0", "1", "1", "1", "5", "2",
                                             "14", "13", "31", "66"};
    for (mg_count_method method : {MG_METHOD_BRUTE, MG_METHOD_PDA, MG_METHOD_SERIES}) {
        mg_sequence* seq = nullptr;
        REQUIRE(mg_sequence_compute(MG_SEQ_IDENTITY_WORDS, method, 10, 0, &seq) == MG_OK);
        CHECK(mg_sequence_rows(seq) == 11);
        CHECK(mg_sequence_index_count(seq) == 1);
        CHECK(sequence_values(seq) == expect);
        uint32_t idx = 99;
        CHECK(mg_sequence_index(seq, 10, 0, &idx) == MG_OK);
        CHECK(idx == 10);
        mg_sequence_free(seq);
    }
}

TEST_CASE("primitive sequence") {
    const std::vector<std::string> expect = {"0", "0", "1", "1", "0", "3", "0", "5", "3"};
    for (mg_count_method method : {MG_METHOD_BRUTE, MG_METHOD_PDA, MG_METHOD_SERIES}) {
        mg_sequence* seq = nullptr;
        REQUIRE(mg_sequence_compute(MG_SEQ_PRIMITIVE_WORDS, method, 8, 0, &seq) == MG_OK);
        CHECK(sequence_values(seq) == expect);
        mg_sequence_free(seq);
    }
}

TEST_CASE("bivariate rows carry two indices and agree across methods") {
    mg_sequence* brute = nullptr;
    REQUIRE(mg_sequence_compute(MG_SEQ_BIVARIATE, MG_METHOD_BRUTE, 8, 0, &brute) == MG_OK);
    CHECK(mg_sequence_index_count(brute) == 2);
    bool found = false;
    for (size_t row = 0; row < mg_sequence_rows(brute); ++row) {
        uint32_t u = 0, s = 0;
        REQUIRE(mg_sequence_index(brute, row, 0, &u) == MG_OK);
        REQUIRE(mg_sequence_index(brute, row, 1, &s) == MG_OK);
        CHECK(u % 3 == 0);
        CHECK(s % 2 == 0);
        if (u == 3 && s == 2) {
            char* v = nullptr;
            REQUIRE(mg_sequence_value(brute, row, &v) == MG_OK);
            CHECK(take_string(v) == "5");
            found = true;
        }
    }
    CHECK(found);

    mg_sequence* series = nullptr;
    REQUIRE(mg_sequence_compute(MG_SEQ_BIVARIATE, MG_METHOD_SERIES, 8, 0, &series) == MG_OK);
    REQUIRE(mg_sequence_rows(series) == mg_sequence_rows(brute));
    CHECK(sequence_values(series) == sequence_values(brute));

    mg_sequence_free(brute);
    mg_sequence_free(series);
}

TEST_CASE("reduced-word sequence") {
    mg_sequence* seq = nullptr;
    REQUIRE(mg_sequence_compute(MG_SEQ_REDUCED_WORDS, MG_METHOD_BRUTE, 11, 0, &seq) == MG_OK);
    auto values = sequence_values(seq);
    CHECK(values.back() == "6464");
    mg_sequence_free(seq);

    REQUIRE(mg_sequence_compute(MG_SEQ_REDUCED_WORDS, MG_METHOD_SERIES, 11, 0, &seq) == MG_OK);
    CHECK(sequence_values(seq) == values);
    mg_sequence_free(seq);

    CHECK(mg_sequence_compute(MG_SEQ_REDUCED_WORDS, MG_METHOD_PDA, 5, 0, &seq) ==
          MG_ERROR_UNSUPPORTED);
}

TEST_CASE("budget errors surface as status codes") {
    mg_sequence* seq = nullptr;
    CHECK(mg_sequence_compute(MG_SEQ_IDENTITY_WORDS, MG_METHOD_BRUTE, 30, 0, &seq) ==
          MG_ERROR_BUDGET);
    CHECK(seq == nullptr);

    // Lowering the budget tightens the limit.
    CHECK(mg_sequence_compute(MG_SEQ_IDENTITY_WORDS, MG_METHOD_BRUTE, 12, 10, &seq) ==
          MG_ERROR_BUDGET);
    REQUIRE(mg_sequence_compute(MG_SEQ_IDENTITY_WORDS, MG_METHOD_BRUTE, 10, 10, &seq) == MG_OK);
    CHECK(mg_sequence_rows(seq) == 11);
    mg_sequence_free(seq);
}

TEST_CASE("verify suites run through the C surface") {
    mg_verify_limits limits{};
    limits.max_len = 8;
    limits.t_order = 60;
    limits.q_order = 14;
    limits.k_order = 14;
    int all_passed = 0;
    char* report = nullptr;
    REQUIRE(mg_verify_run(MG_VERIFY_CUBIC, &limits, &all_passed, &report) == MG_OK);
    CHECK(all_passed == 1);
    std::string text = take_string(report);
    CHECK(text.find("ok") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);

    REQUIRE(mg_verify_run(MG_VERIFY_ORACLES, &limits, &all_passed, nullptr) == MG_OK);
    CHECK(all_passed == 1);
}

TEST_CASE("cayley graph export") {
    char* dot = nullptr;
    REQUIRE(mg_cayley_dot(1, &dot) == MG_OK);
    std::string text = take_string(dot);
    CHECK(text.find("digraph cayley {") == 0);
    CHECK(text.find("\"1,0,0,1\" -> \"0,1,-1,1\" [label=\"U\"]") != std::string::npos);
    CHECK(text.find("\"1,0,0,1\" -> \"0,1,-1,0\" [label=\"S\"]") != std::string::npos);
    CHECK(text.find("\"0,1,-1,0\" -> \"1,0,0,1\" [label=\"S\"]") != std::string::npos);

    CHECK(mg_cayley_dot(13, &dot) == MG_ERROR_DOMAIN);
}

}  // TEST_SUITE
