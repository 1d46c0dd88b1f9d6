#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace neutral;
using namespace fixtures;

TEST_CASE("returns to a letter", "[returns][oracle]") {
    auto S = cassaigne(20);
    auto a = S.parse("a");
    auto r = right_return_words(S, a);
    REQUIRE(r.complete);
    // exhaustive scan: acad would need ad, which is not a factor
    CHECK(spelled(S, *r.right_returns) == std::vector<std::string>{"bca", "cda", "bcda"});
    CHECK(spelled_set(S, r.complete_returns) == std::set<std::string>{"abca", "abcda", "acda"});
    CHECK(spelled_set(S, r.complete_returns) == oracle::complete_returns(oracle::cassaigne(20), {"a"}));
    CHECK_FALSE(S.contains(S.parse("ad")));

    auto c = complete_return_words(S, code(S, {"c"}));
    CHECK(spelled_set(S, c.complete_returns) == std::set<std::string>{"cabc", "cdabc", "cdac"});
    CHECK(right_return_words(S, S.parse("c")).right_returns->size() == 3);

    auto F = fibonacci(12);
    auto fa = complete_return_words(F, code(F, {"a"}));
    CHECK(spelled_set(F, fa.complete_returns) == std::set<std::string>{"aa", "aba"});
    CHECK(right_return_words(F, F.parse("a")).right_returns->size() == 2);

    auto U = build_from_morphic_fixed_point(Morphism(Alphabet::of_chars("a"), {Word(2, char(0))}), 0, 6);
    CHECK(spelled(U, *right_return_words(U, U.parse("a")).right_returns) == std::vector<std::string>{"a"});

    CHECK_THROWS_AS(right_return_words(S, Word{}), data_error);
    CHECK_THROWS_AS(right_return_words(S, S.parse("aa")), data_error);
}

TEST_CASE("returns to uniform codes", "[returns]") {
    auto S = cassaigne(12);
    CHECK(complete_return_words(S, uniform_code(S, 1)).complete_returns == S.of_length(2));
    for (std::size_t n = 1; n <= 6; ++n) {
        auto r = complete_return_words(S, uniform_code(S, n));
        CHECK(r.complete);
        CHECK(r.complete_returns == S.of_length(n + 1));
        CHECK(all_pass(verify_return_cardinality(S, uniform_code(S, n))));
    }
}

TEST_CASE("return words against the definition", "[returns][oracle]") {
    auto S = cassaigne(30);
    auto ref = oracle::cassaigne(30);
    for (const auto& X : {cassaigne_code(S), code(S, {"a", "bc"}), code(S, {"ab", "ca"}), uniform_code(S, 2)}) {
        auto r = complete_return_words(S, X);
        REQUIRE(r.complete);
        CHECK(spelled_set(S, r.complete_returns) == oracle::complete_returns(ref, spelled(S, X.words)));
        auto cr = code_kind(r.complete_returns);
        CHECK(cr.is_bifix_code);
        for (const auto& y : r.complete_returns)
            for (const auto& z : r.complete_returns)
                if (y != z) CHECK(S.render(z).find(S.render(y)) == std::string::npos);
    }
}

TEST_CASE("complete returns equal x times right returns", "[returns]") {
    auto S = cassaigne(30);
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& x : S.of_length(n)) {
            auto r = right_return_words(S, x);
            REQUIRE(r.complete);
            std::set<Word> prefixed;
            for (const auto& u : *r.right_returns) prefixed.insert(x + u);
            CHECK(prefixed == std::set<Word>(r.complete_returns.begin(), r.complete_returns.end()));
        }
}

TEST_CASE("return cardinality", "[returns]") {
    auto S = cassaigne(30);
    auto one = verify_return_cardinality(S, code(S, {"a"}));
    REQUIRE(one.size() == 2);
    CHECK(one[0].lhs == "3");
    CHECK(one[0].pass);
    CHECK(one[1].pass);

    // acd, bca and bcd contain c internally, so they begin no return word
    auto six = verify_return_cardinality(S, cassaigne_code(S));
    CHECK_FALSE(six[0].pass);
    CHECK(six[0].lhs == "5");
    CHECK(six[0].rhs == "8");
    REQUIRE(six[0].witness);
    CHECK(six[0].witness->find("internal factors in {acd,bca,bcd}") != std::string::npos);
    CHECK(spelled_set(S, complete_return_words(S, cassaigne_code(S)).complete_returns) ==
          std::set<std::string>{"abc", "cab", "cda", "dab", "dac"});
    CHECK(all_pass(verify_return_cardinality(S, code(S, {"ab", "ca"}))));

    auto F = fibonacci(12);
    auto f = verify_return_cardinality(F, code(F, {"a"}));
    CHECK(f[1].lhs == "2");
    CHECK(all_pass(f));
}

TEST_CASE("incomplete enumerations are refused", "[returns]") {
    auto S = cassaigne(6);
    auto X = code(S, {"abca"});
    auto r = complete_return_words(S, X);
    CHECK_FALSE(r.complete);
    CHECK_FALSE(r.incomplete_reason.empty());
    CHECK_THROWS_AS(verify_return_cardinality(S, X), horizon_error);
    CHECK_THROWS_AS(complete_return_words(S, code(S, {"a", "ab"})), data_error);
}

TEST_CASE("returns of all short words", "[returns][property]") {
    auto S = cassaigne(60);
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& x : S.of_length(n)) {
            auto r = right_return_words(S, x);
            REQUIRE(r.complete);
            CHECK(r.right_returns->size() == 3);
        }
}
