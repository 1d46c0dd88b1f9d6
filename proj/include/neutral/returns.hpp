#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "neutral/bifix.hpp"
#include "neutral/check.hpp"
#include "neutral/extension.hpp"

namespace neutral {

struct ReturnReport {
    std::vector<Word> target;
    std::vector<Word> complete_returns;            ///< CR_S(X), shortlex order
    std::optional<std::vector<Word>> right_returns;  ///< R_S(x) for a single-word target
    bool complete = true;                          ///< false if a return word may exceed the horizon
    std::string incomplete_reason;
};

namespace detail {

inline bool has_proper_prefix_in(const Word& y, const std::vector<Word>& xs) {
    return std::any_of(xs.begin(), xs.end(), [&](const Word& x) { return is_proper_prefix(x, y); });
}
inline bool has_proper_suffix_in(const Word& y, const std::vector<Word>& xs) {
    return std::any_of(xs.begin(), xs.end(), [&](const Word& x) { return is_proper_suffix(x, y); });
}
inline bool has_internal_factor_in(const Word& y, const std::vector<Word>& xs) {
    return std::any_of(xs.begin(), xs.end(), [&](const Word& x) { return is_internal_factor(x, y); });
}

} // namespace detail

/// Complete first return words: members with a proper prefix in X, a proper
/// suffix in X and no internal factor in X.
inline ReturnReport complete_return_words(const FactorSet& S, const CodeSet& X) {
    if (!X.is_bifix_code) throw data_error("complete return words need a bifix code");
    require_subset(S, X);
    ReturnReport rep;
    rep.target = X.words;
    const auto N = S.horizon();
    for (const auto& y : S.sorted_words()) {
        if (y.size() < 2 || !detail::has_proper_prefix_in(y, X.words) ||
            detail::has_internal_factor_in(y, X.words))
            continue;
        if (detail::has_proper_suffix_in(y, X.words)) {
            rep.complete_returns.push_back(y);
        } else if (y.size() == N && rep.complete) {
            rep.complete = false;
            rep.incomplete_reason = "'" + S.render(y) +
                                    "' has a prefix in the code but no return within horizon " +
                                    std::to_string(N);
        }
    }
    return rep;
}

/// R_S(x) = { u : xu in CR_S(x) }.
inline ReturnReport right_return_words(const FactorSet& S, const Word& x) {
    if (x.empty()) throw data_error("return words are defined for nonempty words");
    if (x.size() > S.horizon() || !S.contains(x))
        throw data_error("word '" + S.render(x) + "' is not in the set");
    auto rep = complete_return_words(S, code_kind({x}));
    std::vector<Word> right;
    for (const auto& y : rep.complete_returns) right.push_back(y.substr(x.size()));
    std::sort(right.begin(), right.end(), shortlex_less{});
    rep.right_returns = std::move(right);
    return rep;
}

/// Card(CR_S(X)) = Card(X) + Card(A) - chi(S); for a single word also
/// Card(R_S(x)) = Card(A) - chi(S) + 1. Refuses incomplete enumerations.
inline std::vector<Check> verify_return_cardinality(const FactorSet& S, const CodeSet& X) {
    auto rep = complete_return_words(S, X);
    if (!rep.complete) throw horizon_error("return enumeration incomplete: " + rep.incomplete_reason);
    const long long k = static_cast<long long>(S.alphabet().size());
    const long long chi = characteristic(S);
    const long long card = static_cast<long long>(rep.complete_returns.size());
    const long long expected = static_cast<long long>(X.size()) + k - chi;
    std::string target;
    for (const auto& x : X.words) target += (target.empty() ? "" : ",") + S.render(x);
    // a code word with an internal factor in X starts no return word
    std::string blocked;
    for (const auto& x : X.words)
        if (detail::has_internal_factor_in(x, X.words)) blocked += (blocked.empty() ? "" : ",") + S.render(x);
    std::optional<std::string> witness;
    if (card != expected)
        witness = "X = {" + target + "}" + (blocked.empty() ? "" : "; internal factors in {" + blocked + "}");
    std::vector<Check> out;
    out.push_back({"return-cardinality", "Card(CR_S(X)) = Card(X) + Card(A) - chi(S)",
                   std::to_string(card), std::to_string(expected), card == expected, witness,
                   "horizon " + std::to_string(S.horizon())});
    if (X.size() == 1) {
        auto right = right_return_words(S, X.words.front());
        const long long rc = static_cast<long long>(right.right_returns->size());
        out.push_back({"right-return-cardinality", "Card(R_S(x)) = Card(A) - chi(S) + 1",
                       std::to_string(rc), std::to_string(k - chi + 1), rc == k - chi + 1,
                       rc == k - chi + 1 ? std::nullopt : std::optional<std::string>("x = " + target),
                       "horizon " + std::to_string(S.horizon())});
    }
    return out;
}

} // namespace neutral
