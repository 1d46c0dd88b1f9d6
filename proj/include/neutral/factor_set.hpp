#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "neutral/alphabet.hpp"
#include "neutral/errors.hpp"

namespace neutral {

/// All words of a factorial language up to a fixed length (the horizon).
///
/// Immutable once built. Statistics that look one letter to each side of a
/// word are only meaningful for |w| <= horizon - 2; callers enforce that.
class FactorSet {
public:
    /// Takes an already factor-closed collection; throws if it is not.
    FactorSet(Alphabet alphabet, std::size_t horizon, std::unordered_set<Word> words,
              std::string provenance)
        : alphabet_(std::move(alphabet)), horizon_(horizon), provenance_(std::move(provenance)),
          members_(std::move(words)) {
        if (horizon_ < 2) throw data_error("horizon must be at least 2");
        members_.insert(Word{});
        by_length_.assign(horizon_ + 1, {});
        for (const auto& w : members_) {
            if (w.size() > horizon_) throw data_error("word longer than horizon");
            if (!alphabet_.valid(w)) throw data_error("word outside alphabet");
            by_length_[w.size()].push_back(w);
        }
        for (auto& bucket : by_length_) std::sort(bucket.begin(), bucket.end());
        for (const auto& w : members_) {
            if (w.empty()) continue;
            if (!members_.contains(w.substr(1)) || !members_.contains(w.substr(0, w.size() - 1)))
                throw data_error("word set is not factorial at '" + alphabet_.render(w) + "'");
        }
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t horizon() const noexcept { return horizon_; }
    const std::string& provenance() const noexcept { return provenance_; }

    /// Membership for |w| <= horizon; longer queries are a horizon error.
    bool contains(const Word& w) const {
        if (w.size() > horizon_)
            throw horizon_error("membership of a word of length " + std::to_string(w.size()) +
                                " is undecided at horizon " + std::to_string(horizon_));
        return members_.contains(w);
    }

    const std::vector<Word>& of_length(std::size_t n) const {
        if (n > horizon_) throw horizon_error("length beyond horizon");
        return by_length_[n];
    }

    std::size_t count(std::size_t n) const { return of_length(n).size(); }
    std::size_t size() const noexcept { return members_.size(); }

    /// Every member in length-then-lexicographic order.
    std::vector<Word> sorted_words() const {
        std::vector<Word> out;
        out.reserve(members_.size());
        for (const auto& bucket : by_length_) out.insert(out.end(), bucket.begin(), bucket.end());
        return out;
    }

    /// Words of length <= horizon - 2 with no two-sided extension.
    std::vector<Word> non_biextendable() const {
        std::vector<Word> out;
        for (std::size_t n = 0; n + 2 <= horizon_; ++n) {
            for (const auto& w : by_length_[n]) {
                bool ok = false;
                for (std::size_t a = 0; a < alphabet_.size() && !ok; ++a)
                    for (std::size_t b = 0; b < alphabet_.size() && !ok; ++b)
                        ok = members_.contains(static_cast<char>(a) + w + static_cast<char>(b));
                if (!ok) out.push_back(w);
            }
        }
        return out;
    }

    std::string render(const Word& w) const { return alphabet_.render(w); }
    Word parse(std::string_view text) const { return alphabet_.parse(text); }

    bool operator==(const FactorSet& o) const {
        return alphabet_ == o.alphabet_ && horizon_ == o.horizon_ && by_length_ == o.by_length_;
    }

private:
    Alphabet alphabet_;
    std::size_t horizon_;
    std::string provenance_;
    std::unordered_set<Word> members_;
    std::vector<std::vector<Word>> by_length_;
};

/// Non-erasing morphism between two alphabets.
struct Morphism {
    Alphabet source;
    Alphabet target;
    std::vector<Word> images;  ///< indexed by source letter

    Morphism(Alphabet src, Alphabet tgt, std::vector<Word> imgs)
        : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
        if (images.size() != source.size())
            throw data_error("morphism needs exactly one image per source symbol");
        for (std::size_t a = 0; a < images.size(); ++a) {
            if (images[a].empty())
                throw data_error("image of '" + source.name(static_cast<Letter>(a)) + "' is empty");
            if (!target.valid(images[a])) throw data_error("image symbol outside target alphabet");
        }
    }

    /// Endomorphism of `alphabet`.
    Morphism(const Alphabet& alphabet, std::vector<Word> imgs)
        : Morphism(alphabet, alphabet, std::move(imgs)) {}

    Word apply(const Word& w) const {
        Word out;
        for (char c : w) out += images[static_cast<Letter>(c)];
        return out;
    }

    bool endomorphism() const { return source == target; }
};

namespace detail {

inline void add_factors(const Word& w, std::size_t horizon, std::unordered_set<Word>& out) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t len = 1; len <= horizon && i + len <= w.size(); ++len)
            out.insert(w.substr(i, len));
}

} // namespace detail

/// Factorial closure (length <= N) of a collection of words over one alphabet.
inline FactorSet build_from_words(const Alphabet& alphabet, const std::vector<Word>& words,
                                  std::size_t horizon, std::string provenance = "words") {
    if (horizon < 2) throw data_error("horizon must be at least 2");
    std::unordered_set<Word> all{Word{}};
    for (const auto& w : words) {
        if (!alphabet.valid(w)) throw data_error("word uses symbols outside the alphabet");
        detail::add_factors(w, horizon, all);
    }
    return FactorSet(alphabet, horizon, std::move(all), std::move(provenance));
}

/// Spelled variant: every word string is parsed with the same alphabet, so a
/// symbol foreign to it (a mixed-alphabet corpus) is reported.
inline FactorSet build_from_spelled_words(const Alphabet& alphabet,
                                          const std::vector<std::string>& spelled,
                                          std::size_t horizon, std::string provenance = "words") {
    std::vector<Word> words;
    words.reserve(spelled.size());
    for (const auto& s : spelled) {
        try {
            words.push_back(alphabet.parse(s));
        } catch (const parse_error& e) {
            throw data_error(std::string("mixed alphabets: ") + e.what());
        }
    }
    return build_from_words(alphabet, words, horizon, std::move(provenance));
}

/// Iteration cap of the morphic closure for horizon N.
inline std::size_t morphic_iteration_cap(std::size_t horizon) { return 4 * horizon + 16; }

/// Factors of length <= N of the fixed point sigma^omega(seed).
///
/// Closure: start from {seed} and keep adding the factors of the images of
/// known factors until nothing new appears. Every length-<=N factor of
/// sigma^k(seed) is covered by the image of a factor of sigma^(k-1)(seed) of
/// length <= N, since images are nonempty, so the fixed point is exact.
inline FactorSet build_from_morphic_fixed_point(const Morphism& sigma, Letter seed,
                                                std::size_t horizon) {
    if (!sigma.endomorphism()) throw data_error("fixed points need an endomorphism");
    if (horizon < 2) throw data_error("horizon must be at least 2");
    if (seed >= sigma.source.size()) throw data_error("seed outside alphabet");
    const Word& first = sigma.images[seed];
    if (static_cast<Letter>(first[0]) != seed || first.size() < 2)
        throw data_error("morphism is not prolongable on '" + sigma.source.name(seed) + "'");

    std::unordered_set<Word> known{Word{}, letter_word(seed)};
    std::vector<Word> frontier{letter_word(seed)};
    const std::size_t cap = morphic_iteration_cap(horizon);
    std::size_t rounds = 0;
    while (!frontier.empty()) {
        if (++rounds > cap)
            throw data_error("morphic closure did not stabilise within " + std::to_string(cap) +
                             " rounds");
        std::unordered_set<Word> fresh;
        for (const auto& u : frontier) detail::add_factors(sigma.apply(u), horizon, fresh);
        frontier.clear();
        for (auto& w : fresh)
            if (known.insert(w).second) frontier.push_back(w);
    }

    std::string prov = "fixed point of";
    for (std::size_t a = 0; a < sigma.images.size(); ++a)
        prov += " " + sigma.source.name(static_cast<Letter>(a)) + "->" +
                sigma.target.render(sigma.images[a]);
    prov += " from " + sigma.source.name(seed);
    FactorSet result(sigma.source, horizon, std::move(known), std::move(prov));
    if (auto bad = result.non_biextendable(); !bad.empty())
        throw data_error("fixed point language is not biextendable at '" +
                         result.render(bad.front()) + "'");
    return result;
}

} // namespace neutral
