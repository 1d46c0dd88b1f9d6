#pragma once

// Brute-force references used by the unit and acceptance suites. None of
// these go through the library's closure, graph or parse machinery.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "neutral/quadratic.hpp"

namespace oracle {

using Spelled = std::string;

/// Prefix of length n of the fixed point of `rules` (spelled letters).
inline Spelled fixed_point_prefix(const std::map<char, Spelled>& rules, char seed, std::size_t n) {
    Spelled w(1, seed);
    while (w.size() < n) {
        Spelled next;
        for (char c : w) next += rules.at(c);
        w = std::move(next);
    }
    return w.substr(0, n);
}

/// All factors of w of length <= N, empty word included.
inline std::set<Spelled> factors(const Spelled& w, std::size_t N) {
    std::set<Spelled> out{""};
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t len = 1; len <= N && i + len <= w.size(); ++len) out.insert(w.substr(i, len));
    return out;
}

inline std::vector<Spelled> of_length(const std::set<Spelled>& s, std::size_t n) {
    std::vector<Spelled> out;
    for (const auto& w : s)
        if (w.size() == n) out.push_back(w);
    return out;
}

inline const std::map<char, Spelled>& cassaigne_rules() {
    static const std::map<char, Spelled> r{{'a', "ab"}, {'b', "cda"}, {'c', "cd"}, {'d', "abc"}};
    return r;
}

/// Factors of length <= N of the Cassaigne fixed point, read off a long prefix.
inline std::set<Spelled> cassaigne(std::size_t N, std::size_t prefix = 200000) {
    return factors(fixed_point_prefix(cassaigne_rules(), 'a', prefix), N);
}

/// e - l - r + 1 counted directly from two-sided occurrences.
inline long long multiplicity(const std::set<Spelled>& S, const Spelled& w, const Spelled& letters) {
    std::set<char> L, R;
    long long e = 0;
    for (char a : letters) {
        if (S.count(Spelled(1, a) + w)) L.insert(a);
        if (S.count(w + a)) R.insert(a);
        for (char b : letters)
            if (S.count(Spelled(1, a) + w + b)) ++e;
    }
    return e - static_cast<long long>(L.size()) - static_cast<long long>(R.size()) + 1;
}

inline bool in_star(const std::vector<Spelled>& X, const Spelled& w) {
    if (w.empty()) return true;
    for (const auto& x : X)
        if (w.compare(0, x.size(), x) == 0 && x.size() <= w.size() && in_star(X, w.substr(x.size())))
            return true;
    return false;
}

inline bool has_suffix_in(const std::vector<Spelled>& X, const Spelled& v) {
    for (const auto& x : X)
        if (x.size() <= v.size() && v.compare(v.size() - x.size(), x.size(), x) == 0) return true;
    return false;
}

inline bool has_prefix_in(const std::vector<Spelled>& X, const Spelled& u) {
    for (const auto& x : X)
        if (x.size() <= u.size() && u.compare(0, x.size(), x) == 0) return true;
    return false;
}

/// Number of triples (v, x, u) with w = vxu, v without suffix in X,
/// x in X*, u without prefix in X.
inline std::size_t parse_count(const std::vector<Spelled>& X, const Spelled& w) {
    std::size_t count = 0;
    for (std::size_t i = 0; i <= w.size(); ++i)
        for (std::size_t j = i; j <= w.size(); ++j)
            if (!has_suffix_in(X, w.substr(0, i)) && !has_prefix_in(X, w.substr(j)) &&
                in_star(X, w.substr(i, j - i)))
                ++count;
    return count;
}

/// y has an occurrence of x with nonempty context on both sides.
inline bool internal(const Spelled& y, const Spelled& x) {
    for (auto i = y.find(x, 1); i != Spelled::npos; i = y.find(x, i + 1))
        if (i + x.size() < y.size()) return true;
    return false;
}

/// Complete first return words to X inside S, by the plain definition.
inline std::set<Spelled> complete_returns(const std::set<Spelled>& S, const std::vector<Spelled>& X) {
    std::set<Spelled> out;
    for (const auto& y : S) {
        bool pre = false, suf = false, inner = false;
        for (const auto& x : X) {
            if (x.size() < y.size() && y.compare(0, x.size(), x) == 0) pre = true;
            if (x.size() < y.size() && y.compare(y.size() - x.size(), x.size(), x) == 0) suf = true;
            if (internal(y, x)) inner = true;
        }
        if (pre && suf && !inner) out.insert(y);
    }
    return out;
}

/// Rotation by alpha on ]0,1[ coded by the cut points `cuts` (increasing),
/// letters 'a', 'b', ... from left to right.
struct Rotation {
    neutral::QuadraticReal alpha;
    std::vector<neutral::QuadraticReal> cuts;

    bool on_cut(const neutral::QuadraticReal& x) const {
        return std::find(cuts.begin(), cuts.end(), x) != cuts.end();
    }
    char letter(const neutral::QuadraticReal& x) const {
        char c = 'a';
        for (const auto& t : cuts)
            if (x > t) ++c;
        return c;
    }
    neutral::QuadraticReal step(const neutral::QuadraticReal& x) const {
        auto y = x + alpha;
        return y >= neutral::QuadraticReal(1) ? y - neutral::QuadraticReal(1) : y;
    }
    /// Coding of the orbit of x, or empty when the orbit meets a cut or 0.
    Spelled orbit_word(neutral::QuadraticReal x, std::size_t steps) const {
        Spelled out;
        for (std::size_t i = 0; i < steps; ++i) {
            if (on_cut(x) || x.sign() == 0) return {};
            out += letter(x);
            x = step(x);
        }
        return out;
    }
};

} // namespace oracle
