#include <catch_amalgamated.hpp>

#include <map>

#include "helpers.hpp"

using namespace neutral;
using namespace fixtures;

TEST_CASE("code kinds", "[bifix]") {
    auto S = cassaigne(8);
    auto X = cassaigne_code(S);
    CHECK(X.is_prefix_code);
    CHECK(X.is_suffix_code);
    CHECK(X.is_bifix_code);
    CHECK(X.is_code);
    CHECK(X.max_len == 3);

    auto Y = code(S, {"a", "ab"});
    CHECK_FALSE(Y.is_prefix_code);
    CHECK(Y.is_suffix_code);
    CHECK(Y.is_code);

    auto Z = code(S, {"a", "ac", "b", "bc", "d"});
    CHECK(Z.is_suffix_code);
    CHECK_FALSE(Z.is_prefix_code);

    auto A = Alphabet::of_chars("ab");
    auto W = code_kind(std::vector<Word>{A.parse("a"), A.parse("ab"), A.parse("ba")});
    CHECK_FALSE(W.is_code);  // a.ba = ab.a
    CHECK_THROWS_AS(code_kind(std::vector<Word>{Word{}, A.parse("a")}), data_error);
    CHECK_THROWS_AS(require_subset(S, code(S, {"aa"})), data_error);
    CHECK_THROWS_AS(is_s_maximal(S, code(S, {"aa"}), CodeMode::prefix), data_error);
}

TEST_CASE("uniform codes", "[bifix]") {
    auto S = cassaigne(8);
    CHECK(spelled(S, uniform_code(S, 2).words) == std::vector<std::string>{"ab", "ac", "bc", "ca", "cd", "da"});
    CHECK(uniform_code(S, 1).size() == 4);
    CHECK(uniform_code(S, 3).size() == 8);
    CHECK(uniform_code(S, 3).is_bifix_code);
    CHECK_THROWS(uniform_code(S, 0));
    CHECK_THROWS(uniform_code(S, 9));
}

TEST_CASE("maximality", "[bifix]") {
    auto S = cassaigne(10);
    CHECK(is_s_maximal(S, code(S, {"a", "ac", "b", "bc", "d"}), CodeMode::suffix).maximal);
    auto bif = is_s_maximal(S, uniform_code(S, 2), CodeMode::bifix);
    CHECK(bif.maximal);
    CHECK(bif.prefix_maximal);
    CHECK(bif.suffix_maximal);

    auto ab = is_s_maximal(S, code(S, {"ab"}), CodeMode::prefix);
    REQUIRE_FALSE(ab.maximal);
    REQUIRE(ab.witness);
    const auto w = S.render(*ab.witness);
    CHECK(S.contains(*ab.witness));
    CHECK((w[0] != 'a' || w.rfind("ac", 0) == 0));

    auto X = cassaigne_code(S);
    CHECK(is_s_maximal(S, X, CodeMode::bifix).maximal);
    CHECK_FALSE(is_s_maximal(S, code(S, {"ab", "bc"}), CodeMode::bifix).maximal);

    auto small = cassaigne(5);
    CHECK_THROWS_AS(is_s_maximal(small, uniform_code(small, 3), CodeMode::bifix), horizon_error);
}

TEST_CASE("parse counts against brute force", "[bifix][oracle]") {
    auto S = cassaigne(10);
    auto check_code = [&](const CodeSet& X) {
        ParseContext ctx(X);
        auto spelled_code = spelled(S, X.words);
        for (std::size_t n = 0; n <= 8; ++n)
            for (const auto& w : S.of_length(n))
                REQUIRE(parse_count(ctx, w) == oracle::parse_count(spelled_code, S.render(w)));
    };
    check_code(cassaigne_code(S));
    check_code(uniform_code(S, 2));
    check_code(uniform_code(S, 3));
    check_code(code(S, {"a", "ac", "b", "bc", "d"}));

    ParseContext ctx(cassaigne_code(S));
    CHECK(ctx.parse_count(Word{}) == 1);
    CHECK(ctx.q_test(S.parse("bd")));
    CHECK_FALSE(ctx.q_test(S.parse("abc")));
    CHECK(ctx.p_test(S.parse("ba")) == true);
    CHECK(ctx.in_star(S.parse("abcda")));
    CHECK_FALSE(ctx.in_star(S.parse("abd")));

    ParseContext two(uniform_code(S, 2));
    for (const auto& w : S.of_length(3)) CHECK(two.parse_count(w) == 2);
}

TEST_CASE("parse counts of code words", "[bifix]") {
    // a code word has d_X(S) parses unless it is an internal factor of X
    auto S = cassaigne(10);
    for (const auto& X : {cassaigne_code(S), uniform_code(S, 2), uniform_code(S, 3)}) {
        ParseContext ctx(X);
        const auto d = s_degree(S, X).degree;
        for (const auto& x : X.words) {
            bool inner = false;
            for (const auto& y : X.words) inner = inner || is_internal_factor(x, y);
            CHECK((ctx.parse_count(x) < d) == inner);
        }
    }
}

TEST_CASE("degree", "[bifix]") {
    auto S = cassaigne(12);
    auto d = s_degree(S, cassaigne_code(S));
    CHECK(d.degree == 2);
    CHECK(d.internal_factor_check);
    CHECK(d.stabilized);
    for (std::size_t n = 1; n <= 6; ++n) {
        auto r = s_degree(S, uniform_code(S, n));
        CHECK(r.degree == n);
        CHECK(r.internal_factor_check);
    }
    CHECK(s_degree(fibonacci(6), uniform_code(fibonacci(6), 1)).degree == 1);
    CHECK_THROWS_AS(s_degree(cassaigne(5), uniform_code(cassaigne(5), 3)), horizon_error);

    // every long member has exactly n parses
    auto X = uniform_code(S, 3);
    ParseContext ctx(X);
    for (std::size_t m = 3; m <= 6; ++m)
        for (const auto& w : S.of_length(m)) CHECK(ctx.parse_count(w) == 3);
}

TEST_CASE("prefix partition", "[bifix]") {
    auto S = cassaigne(12);
    auto classes = prefix_partition(S, cassaigne_code(S));
    REQUIRE(classes.size() == 1);
    CHECK(spelled(S, classes[0].words) == std::vector<std::string>{"a", "ac", "b", "bc", "d"});
    CHECK(is_s_maximal(S, classes[0], CodeMode::suffix).maximal);

    CHECK(prefix_partition(S, uniform_code(S, 1)).empty());

    auto X3 = uniform_code(S, 3);
    auto c3 = prefix_partition(S, X3);
    REQUIRE(c3.size() == 2);
    std::set<Word> seen;
    std::size_t total = 0;
    for (const auto& y : c3) {
        CHECK(is_s_maximal(S, y, CodeMode::suffix).maximal);
        for (const auto& w : y.words) seen.insert(w);
        total += y.size();
    }
    CHECK(total == seen.size());
    auto pp = proper_prefixes(X3);
    pp.erase(pp.begin());
    CHECK(std::vector<Word>(seen.begin(), seen.end()) == pp);
    // class keyed by parse count: words of length 1 have 2 parses, length 2 have 3
    ParseContext ctx(X3);
    for (const auto& w : c3[0].words) CHECK(ctx.parse_count(w) == 2);
    for (const auto& w : c3[1].words) CHECK(ctx.parse_count(w) == 3);

    CHECK_THROWS_AS(prefix_partition(S, code(S, {"ab", "bc"})), data_error);
}

TEST_CASE("rho sums", "[bifix]") {
    auto S = cassaigne(12);
    auto y = rho_sum_report(S, code(S, {"a", "ac", "b", "bc", "d"}).words);
    CHECK(y.value == 2);
    REQUIRE(y.laws.size() == 1);
    CHECK(y.laws[0].pass);

    auto a = rho_sum_report(S, uniform_code(S, 1).words);
    CHECK(a.value == 2);
    REQUIRE(a.laws.size() == 1);
    CHECK(a.laws[0].pass);

    auto p = rho_sum_report(S, proper_prefixes(cassaigne_code(S)));
    CHECK(p.value == 4);
    REQUIRE(p.laws.size() == 1);
    CHECK(p.laws[0].name == "rho-prefix-set");
    CHECK(p.laws[0].pass);

    // not a maximal suffix code: no law applies
    CHECK(rho_sum_report(S, code(S, {"a"}).words).laws.empty());
}

TEST_CASE("cardinality", "[bifix]") {
    auto S = cassaigne(12);
    auto c = verify_cardinality(S, cassaigne_code(S));
    CHECK(c.pass);
    CHECK(c.lhs == "6");
    for (std::size_t n = 1; n <= 6; ++n) {
        auto u = verify_cardinality(S, uniform_code(S, n));
        CHECK(u.pass);
        CHECK(u.lhs == std::to_string(2 * n + 2));
    }
    auto F = fibonacci(8);
    auto f = verify_cardinality(F, uniform_code(F, 3));
    CHECK(f.pass);
    CHECK(f.lhs == "4");
    CHECK_THROWS_AS(verify_cardinality(S, code(S, {"ab"})), data_error);
}

TEST_CASE("exhaustive maximal bifix codes", "[bifix][property]") {
    auto S = cassaigne(12);
    auto codes = enumerate_maximal_bifix_codes(S, 6);
    // counts from an independent exhaustive search over prefix trees
    CHECK(codes.size() == 846);
    std::map<std::size_t, std::size_t> by_degree;
    for (const auto& X : codes) {
        REQUIRE(X.is_bifix_code);
        REQUIRE(is_s_maximal(S, X, CodeMode::bifix).maximal);
        const auto d = s_degree(S, X).degree;
        ++by_degree[d];
        REQUIRE(X.size() == 2 * d + 2);
        if (d <= 3) {
            REQUIRE(verify_cardinality(S, X).pass);
            for (const auto& y : prefix_partition(S, X)) {
                auto r = rho_sum_report(S, y.words);
                REQUIRE(r.value == 2);
            }
            REQUIRE(rho_sum_report(S, proper_prefixes(X)).value == static_cast<long long>(2 * d));
        }
    }
    CHECK(by_degree == std::map<std::size_t, std::size_t>{{1, 1}, {2, 13}, {3, 113}, {4, 446}, {5, 272}, {6, 1}});
}
