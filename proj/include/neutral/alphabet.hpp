#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "neutral/errors.hpp"

namespace neutral {

/// Index of a symbol inside its Alphabet.
using Letter = unsigned char;

/// A word is stored as the sequence of its letter indices; std::string gives
/// us hashing, ordering by alphabet index and cheap substrings for free.
using Word = std::string;

inline constexpr std::size_t max_alphabet_size = 250;

/// Ordered finite alphabet with named symbols.
///
/// When every symbol name is a single character, words are spelled by plain
/// concatenation ("abca"); otherwise symbols are separated by spaces ("b1 b4").
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw data_error("alphabet must contain at least one symbol");
        if (names_.size() > max_alphabet_size) throw data_error("alphabet too large");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            const auto& n = names_[i];
            if (n.empty() || n.find_first_of(" \t\n") != std::string::npos)
                throw parse_error("invalid symbol name '" + n + "'");
            if (!index_.emplace(n, static_cast<Letter>(i)).second)
                throw data_error("duplicate symbol '" + n + "'");
            if (n.size() != 1) compact_ = false;
        }
    }

    /// Alphabet whose symbols are the characters of `chars`, in order.
    static Alphabet of_chars(std::string_view chars) {
        std::vector<std::string> names;
        for (char c : chars) names.emplace_back(1, c);
        return Alphabet(std::move(names));
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(Letter a) const { return names_.at(a); }
    bool compact() const noexcept { return compact_; }

    bool has(std::string_view name) const { return index_.contains(std::string(name)); }

    Letter letter(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) throw parse_error("unknown symbol '" + std::string(name) + "'");
        return it->second;
    }

    Word parse(std::string_view text) const {
        Word w;
        if (compact_) {
            for (char c : text) {
                if (c == ' ') continue;
                w.push_back(static_cast<char>(letter(std::string_view(&c, 1))));
            }
            return w;
        }
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && text[i] == ' ') ++i;
            std::size_t j = text.find(' ', i);
            if (j == std::string_view::npos) j = text.size();
            if (j > i) w.push_back(static_cast<char>(letter(text.substr(i, j - i))));
            i = j;
        }
        return w;
    }

    std::string render(const Word& w) const {
        std::string out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!compact_ && i) out.push_back(' ');
            out += name(static_cast<Letter>(w[i]));
        }
        return out;
    }

    bool valid(const Word& w) const {
        return std::all_of(w.begin(), w.end(),
                           [&](char c) { return static_cast<Letter>(c) < names_.size(); });
    }

    bool operator==(const Alphabet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Letter> index_;
    bool compact_ = true;
};

inline Word letter_word(Letter a) { return Word(1, static_cast<char>(a)); }

/// Length-then-lexicographic order used for every canonical listing.
struct shortlex_less {
    bool operator()(const Word& a, const Word& b) const {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
};

inline bool is_proper_prefix(const Word& p, const Word& w) {
    return p.size() < w.size() && w.compare(0, p.size(), p) == 0;
}

inline bool is_proper_suffix(const Word& s, const Word& w) {
    return s.size() < w.size() && w.compare(w.size() - s.size(), s.size(), s) == 0;
}

inline bool has_prefix(const Word& w, const Word& p) {
    return p.size() <= w.size() && w.compare(0, p.size(), p) == 0;
}

inline bool has_suffix(const Word& w, const Word& s) {
    return s.size() <= w.size() && w.compare(w.size() - s.size(), s.size(), s) == 0;
}

/// True when `v` occurs in `w` as w = x v y with x, y nonempty.
inline bool is_internal_factor(const Word& v, const Word& w) {
    if (v.size() + 2 > w.size()) return false;
    for (auto pos = w.find(v, 1); pos != Word::npos; pos = w.find(v, pos + 1)) {
        if (pos + v.size() < w.size()) return true;
    }
    return false;
}

inline Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

} // namespace neutral
