#pragma once

#include <set>
#include <string>
#include <vector>

#include "neutral/neutral.hpp"
#include "oracles.hpp"

namespace fixtures {

using namespace neutral;

inline Morphism cassaigne_morphism() {
    auto A = Alphabet::of_chars("abcd");
    return Morphism(A, {A.parse("ab"), A.parse("cda"), A.parse("cd"), A.parse("abc")});
}

inline FactorSet cassaigne(std::size_t N) { return build_from_morphic_fixed_point(cassaigne_morphism(), 0, N); }

inline FactorSet fibonacci(std::size_t N) {
    auto A = Alphabet::of_chars("ab");
    return build_from_morphic_fixed_point(Morphism(A, {A.parse("ab"), A.parse("a")}), 0, N);
}

inline FactorSet thue_morse(std::size_t N) {
    auto A = Alphabet::of_chars("ab");
    return build_from_morphic_fixed_point(Morphism(A, {A.parse("ab"), A.parse("ba")}), 0, N);
}

/// Factors of (ab)^omega.
inline FactorSet periodic_ab(std::size_t N) {
    auto A = Alphabet::of_chars("ab");
    std::string w;
    while (w.size() < N + 4) w += "ab";
    return build_from_spelled_words(A, {w}, N, "factors of (ab)^omega");
}

inline CodeSet code(const FactorSet& S, std::vector<std::string> words) { return code_kind(S, words); }

inline CodeSet cassaigne_code(const FactorSet& S) { return code(S, {"ab", "acd", "bca", "bcd", "c", "da"}); }

inline std::set<std::string> spelled(const FactorSet& S) {
    std::set<std::string> out;
    for (const auto& w : S.sorted_words()) out.insert(S.render(w));
    return out;
}

inline std::vector<std::string> spelled(const FactorSet& S, const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(S.render(w));
    return out;
}

inline std::set<std::string> spelled_set(const FactorSet& S, const std::vector<Word>& ws) {
    auto v = spelled(S, ws);
    return {v.begin(), v.end()};
}

inline QuadraticReal alpha() { return QuadraticReal(Rational(3, 2), Rational(-1, 2), 5); }

inline IETSpec rotation3_spec() {
    const auto a = alpha();
    return IETSpec{Alphabet::of_chars("abc"), {0, 1, 2}, {2, 0, 1}, {QuadraticReal(1) - a * 2, a, a}, {}, 0, {}};
}

inline IETSpec rotation2_spec() {
    const auto a = alpha();
    return IETSpec{Alphabet::of_chars("ab"), {0, 1}, {1, 0}, {QuadraticReal(1) - a, a}, {}, 0, {}};
}

} // namespace fixtures
