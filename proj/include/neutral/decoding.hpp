#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "neutral/bifix.hpp"
#include "neutral/check.hpp"
#include "neutral/extension.hpp"

namespace neutral {

/// f : B* -> A*, the i-th letter of B is sent to the i-th word of X in
/// lexicographic order.
struct CodingMorphism {
    CodeSet code;
    Alphabet letters;
    Alphabet target;

    const Word& image(Letter b) const { return code.words.at(b); }

    Word apply(const Word& v) const {
        Word out;
        for (char c : v) out += code.words.at(static_cast<Letter>(c));
        return out;
    }
};

/// Fresh names b1, b2, ... unless `names` is given (one per code word).
inline CodingMorphism coding_morphism(const CodeSet& X, const Alphabet& target,
                                      std::optional<std::vector<std::string>> names = std::nullopt) {
    if (!X.is_code) throw data_error("coding morphisms need a code");
    std::vector<std::string> n;
    if (names) {
        if (names->size() != X.size()) throw data_error("need one letter name per code word");
        n = *names;
    } else {
        for (std::size_t i = 0; i < X.size(); ++i) n.push_back("b" + std::to_string(i + 1));
    }
    return {X, Alphabet(std::move(n)), target};
}

inline std::size_t default_decode_length(const FactorSet& S, const CodeSet& X) {
    return S.horizon() / X.max_len;
}

/// f^{-1}(S) restricted to words of length <= M.
inline FactorSet decode(const FactorSet& S, const CodingMorphism& f, std::size_t M) {
    if (M < 2) throw data_error("decoding length must be at least 2");
    if (M * f.code.max_len > S.horizon())
        throw horizon_error("decoding length " + std::to_string(M) + " needs horizon >= " +
                            std::to_string(M * f.code.max_len));
    std::unordered_set<Word> words{Word{}};
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= M; ++len) {
        std::vector<Word> next;
        for (const auto& v : layer) {
            const Word fv = f.apply(v);
            for (std::size_t b = 0; b < f.letters.size(); ++b) {
                if (S.contains(fv + f.image(static_cast<Letter>(b)))) {
                    next.push_back(v + static_cast<char>(b));
                    words.insert(next.back());
                }
            }
        }
        layer = std::move(next);
    }
    std::string prov = "decoding by";
    for (std::size_t b = 0; b < f.letters.size(); ++b)
        prov += " " + f.letters.name(static_cast<Letter>(b)) + "->" +
                f.target.render(f.image(static_cast<Letter>(b)));
    return FactorSet(f.letters, M, std::move(words), std::move(prov));
}

/// L^X(w), R^Y(w), E^{X,Y}(w) and m^{X,Y}(w).
struct ExtendedStats {
    std::vector<Word> left_code;
    std::vector<Word> right_code;
    std::vector<std::pair<Word, Word>> edges;

    long long m_xy() const {
        return static_cast<long long>(edges.size()) - static_cast<long long>(left_code.size()) -
               static_cast<long long>(right_code.size()) + 1;
    }
};

inline ExtendedStats extended_multiplicity(const FactorSet& S, const Word& w,
                                           const std::vector<Word>& X, const std::vector<Word>& Y) {
    auto longest = [](const std::vector<Word>& v) {
        std::size_t m = 0;
        for (const auto& x : v) m = std::max(m, x.size());
        return m;
    };
    if (longest(X) + w.size() + longest(Y) > S.horizon())
        throw horizon_error("extended multiplicity of '" + S.render(w) + "' exceeds the horizon");
    ExtendedStats st;
    for (const auto& x : X)
        if (S.contains(x + w)) st.left_code.push_back(x);
    for (const auto& y : Y)
        if (S.contains(w + y)) st.right_code.push_back(y);
    for (const auto& x : st.left_code)
        for (const auto& y : st.right_code)
            if (S.contains(x + w + y)) st.edges.emplace_back(x, y);
    return st;
}

struct DecodingReport {
    CodingMorphism morphism;
    FactorSet decoded;
    Classification classification;
    int source_characteristic = 0;
    std::vector<Check> checks;
};

/// Decodes S by X and checks that the result is neutral with the same
/// characteristic, together with m_U(v) = m_S^{X,X}(f(v)) word by word.
inline DecodingReport verify_decoding_neutral(const FactorSet& S, const CodeSet& X,
                                              std::optional<std::size_t> length = std::nullopt) {
    const std::size_t M = length.value_or(default_decode_length(S, X));
    auto maxr = is_s_maximal(S, X, CodeMode::bifix);
    if (!maxr.maximal) throw data_error("decoding needs an S-maximal bifix code: " + maxr.reason);
    auto source = classify(S, S.horizon() - 2);
    if (!source.neutral())
        throw data_error("source set is not neutral at '" + S.render(*source.neutral_witness) + "'");

    auto f = coding_morphism(X, S.alphabet());
    auto U = decode(S, f, M);
    auto cls = classify(U, M - 2);
    DecodingReport rep{f, U, cls, source.characteristic, {}};

    rep.checks.push_back({"decoding-neutral", "f^{-1}(S) is neutral",
                          "neutral up to " + std::to_string(cls.neutral_up_to()),
                          "neutral up to " + std::to_string(M - 2), cls.neutral(),
                          cls.neutral_witness ? std::optional<std::string>(U.render(*cls.neutral_witness))
                                              : std::nullopt,
                          "|v| <= " + std::to_string(M - 2)});
    rep.checks.push_back({"decoding-characteristic", "chi(f^{-1}(S)) = chi(S)",
                          std::to_string(cls.characteristic), std::to_string(source.characteristic),
                          cls.characteristic == source.characteristic, std::nullopt,
                          "decoding length " + std::to_string(M)});

    std::optional<Word> bad;
    std::size_t tested = 0;
    for (std::size_t n = 1; n + 2 <= M; ++n) {
        for (const auto& v : U.of_length(n)) {
            ++tested;
            const auto mu = multiplicity(U, v);
            const auto mxx = extended_multiplicity(S, f.apply(v), X.words, X.words).m_xy();
            if (mu != mxx && !bad) bad = v;
        }
    }
    rep.checks.push_back({"decoding-multiplicity", "m_U(v) = m_S^{X,X}(f(v))",
                          std::to_string(tested) + " words", bad ? "violated" : std::to_string(tested) + " words",
                          !bad, bad ? std::optional<std::string>(U.render(*bad)) : std::nullopt,
                          "1 <= |v| <= " + std::to_string(M - 2)});
    return rep;
}

} // namespace neutral
