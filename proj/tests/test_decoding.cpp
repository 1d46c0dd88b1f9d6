#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace neutral;
using namespace fixtures;

TEST_CASE("coding morphisms", "[decoding]") {
    auto P = periodic_ab(8);
    auto f = coding_morphism(code(P, {"ab", "ba"}), P.alphabet(), std::vector<std::string>{"u", "v"});
    CHECK(P.render(f.image(0)) == "ab");
    CHECK(P.render(f.image(1)) == "ba");
    CHECK(P.render(f.apply(f.letters.parse("uvu"))) == "abbaab");

    auto S = cassaigne(12);
    auto g = coding_morphism(cassaigne_code(S), S.alphabet());
    CHECK(g.letters.size() == 6);
    CHECK(g.letters.render(g.letters.parse("b1 b6")) == "b1 b6");
    std::vector<std::string> images;
    for (std::size_t b = 0; b < 6; ++b) images.push_back(S.render(g.image(static_cast<Letter>(b))));
    CHECK(images == std::vector<std::string>{"ab", "acd", "bca", "bcd", "c", "da"});

    auto A = Alphabet::of_chars("ab");
    auto bad = code_kind(std::vector<Word>{A.parse("a"), A.parse("ab"), A.parse("ba")});
    CHECK_THROWS_AS(coding_morphism(bad, A), data_error);
}

TEST_CASE("decoding the periodic set", "[decoding]") {
    auto P = periodic_ab(12);
    auto f = coding_morphism(code(P, {"ab", "ba"}), P.alphabet(), std::vector<std::string>{"u", "v"});
    auto U = decode(P, f, 6);
    std::set<std::string> expected{""};
    for (std::size_t n = 1; n <= 6; ++n) {
        expected.insert(std::string(n, 'u'));
        expected.insert(std::string(n, 'v'));
    }
    CHECK(spelled(U) == expected);
    CHECK_FALSE(U.contains(U.parse("uv")));
    auto rec = recurrence_report(U, 4);
    REQUIRE_FALSE(rec.recurrent);
    CHECK(U.render(rec.failing_pair->first) == "u");
    CHECK(U.render(rec.failing_pair->second) == "v");

    auto rep = verify_decoding_neutral(P, code(P, {"ab", "ba"}), 6);
    CHECK(all_pass(rep.checks));
    CHECK(rep.classification.characteristic == 2);
}

TEST_CASE("decoding by the alphabet renames", "[decoding]") {
    auto S = cassaigne(10);
    auto f = coding_morphism(uniform_code(S, 1), S.alphabet());
    auto U = decode(S, f, 10);
    CHECK(U.size() == S.size());
    for (const auto& v : U.sorted_words()) CHECK(S.contains(f.apply(v)));
    auto rep = verify_decoding_neutral(S, uniform_code(S, 1), 10);
    CHECK(all_pass(rep.checks));
}

TEST_CASE("decoding a neutral set", "[decoding]") {
    auto S = cassaigne(12);
    auto X = cassaigne_code(S);
    auto rep = verify_decoding_neutral(S, X, 4);
    CHECK(rep.decoded.alphabet().size() == 6);
    CHECK(rep.decoded.count(1) == 6);
    CHECK(rep.classification.neutral());
    CHECK(rep.classification.characteristic == 2);
    REQUIRE(rep.checks.size() == 3);
    CHECK(all_pass(rep.checks));

    auto two = verify_decoding_neutral(cassaigne(10), uniform_code(cassaigne(10), 2), 5);
    CHECK(all_pass(two.checks));
    CHECK(two.classification.characteristic == 2);

    CHECK_THROWS_AS(decode(S, rep.morphism, 5), horizon_error);
    CHECK_THROWS_AS(verify_decoding_neutral(S, code(S, {"ab", "bc"}), 4), data_error);
    auto T = thue_morse(10);
    CHECK_THROWS_AS(verify_decoding_neutral(T, uniform_code(T, 2), 4), data_error);
}

TEST_CASE("decoded membership against images", "[decoding][oracle]") {
    auto S = cassaigne(12);
    auto X = cassaigne_code(S);
    auto f = coding_morphism(X, S.alphabet());
    auto U = decode(S, f, 4);
    auto ref = oracle::cassaigne(12);
    auto images = spelled(S, X.words);
    // all words over the six letters of length <= 4 whose image is a factor
    std::set<std::string> expected{""};
    std::vector<std::string> layer{""};
    for (std::size_t len = 1; len <= 4; ++len) {
        std::vector<std::string> next;
        for (const auto& v : layer)
            for (std::size_t b = 0; b < images.size(); ++b) {
                std::string w = v + char('0' + b);
                std::string img;
                for (char c : w) img += images[c - '0'];
                if (ref.count(img)) {
                    expected.insert(w);
                    next.push_back(w);
                }
            }
        layer = next;
    }
    std::set<std::string> got;
    for (const auto& v : U.sorted_words()) {
        std::string s;
        for (char c : v) s += char('0' + c);
        got.insert(s);
    }
    CHECK(got == expected);
}

TEST_CASE("extended multiplicity", "[decoding]") {
    auto S = cassaigne(12);
    auto A1 = uniform_code(S, 1).words;
    for (std::size_t n = 0; n <= 8; ++n)
        for (const auto& w : S.of_length(n))
            CHECK(extended_multiplicity(S, w, A1, A1).m_xy() == multiplicity(S, w));

    // maximal suffix X on the left, maximal prefix Y on the right
    auto X = code(S, {"a", "ac", "b", "bc", "d"}).words;
    auto Y = uniform_code(S, 2).words;
    for (std::size_t n = 0; n <= 6; ++n)
        for (const auto& w : S.of_length(n))
            CHECK(extended_multiplicity(S, w, X, Y).m_xy() == multiplicity(S, w));

    // brute force for w = a
    auto st = extended_multiplicity(S, S.parse("a"), X, Y);
    auto ref = oracle::cassaigne(12);
    std::size_t edges = 0;
    for (const auto& x : spelled(S, X))
        for (const auto& y : spelled(S, Y))
            if (ref.count(x + "a" + y)) ++edges;
    CHECK(st.edges.size() == edges);

    CHECK_THROWS_AS(extended_multiplicity(S, S.parse("abcdabca"), uniform_code(S, 3).words,
                                          uniform_code(S, 3).words),
                    horizon_error);
}
