#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "neutral/check.hpp"
#include "neutral/extension.hpp"
#include "neutral/factor_set.hpp"

namespace neutral {

/// A finite set of nonempty words with its code classification.
struct CodeSet {
    std::vector<Word> words;  ///< sorted lexicographically, no duplicates
    bool is_prefix_code = false;
    bool is_suffix_code = false;
    bool is_bifix_code = false;
    bool is_code = false;  ///< unique decipherability (Sardinas-Patterson)
    std::size_t max_len = 0;

    bool contains(const Word& w) const { return std::binary_search(words.begin(), words.end(), w); }
    std::size_t size() const { return words.size(); }
};

namespace detail {

/// Sardinas-Patterson test of unique decipherability.
inline bool uniquely_decipherable(const std::vector<Word>& code) {
    std::set<Word> xs(code.begin(), code.end());
    auto quotients = [](const std::set<Word>& lhs, const std::set<Word>& rhs) {
        std::set<Word> out;
        for (const auto& u : lhs)
            for (const auto& v : rhs)
                if (is_proper_prefix(u, v)) out.insert(v.substr(u.size()));
        return out;
    };
    std::set<Word> current = quotients(xs, xs);
    std::set<std::set<Word>> seen;
    while (!current.empty()) {
        if (current.contains(Word{})) return false;
        for (const auto& r : current)
            if (xs.contains(r)) return false;
        if (!seen.insert(current).second) return true;
        auto a = quotients(xs, current);
        auto b = quotients(current, xs);
        a.insert(b.begin(), b.end());
        current = std::move(a);
    }
    return true;
}

} // namespace detail

inline CodeSet code_kind(std::vector<Word> words) {
    if (words.empty()) throw data_error("a code must be nonempty");
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    CodeSet x;
    x.is_prefix_code = x.is_suffix_code = true;
    for (const auto& w : words) {
        if (w.empty()) throw data_error("a code cannot contain the empty word");
        x.max_len = std::max(x.max_len, w.size());
    }
    for (const auto& u : words)
        for (const auto& v : words) {
            if (is_proper_prefix(u, v)) x.is_prefix_code = false;
            if (is_proper_suffix(u, v)) x.is_suffix_code = false;
        }
    x.is_bifix_code = x.is_prefix_code && x.is_suffix_code;
    x.is_code = x.is_prefix_code || x.is_suffix_code || detail::uniquely_decipherable(words);
    x.words = std::move(words);
    return x;
}

inline CodeSet code_kind(const FactorSet& S, const std::vector<std::string>& spelled) {
    std::vector<Word> words;
    for (const auto& s : spelled) words.push_back(S.parse(s));
    return code_kind(std::move(words));
}

/// S ∩ A^n as a code.
inline CodeSet uniform_code(const FactorSet& S, std::size_t n) {
    if (n < 1 || n > S.horizon()) throw data_error("uniform code length out of range");
    return code_kind(S.of_length(n));
}

inline void require_subset(const FactorSet& S, const CodeSet& X) {
    for (const auto& x : X.words)
        if (x.size() > S.horizon() || !S.contains(x))
            throw data_error("code word '" + S.render(x) + "' is not in the set");
}

/// Parse machinery for a code X: Q (no suffix in X), P (no prefix in X), X*.
class ParseContext {
public:
    explicit ParseContext(CodeSet code) : code_(std::move(code)) {}

    const CodeSet& code() const noexcept { return code_; }

    bool q_test(const Word& w) const {
        return std::none_of(code_.words.begin(), code_.words.end(),
                            [&](const Word& x) { return has_suffix(w, x); });
    }
    bool p_test(const Word& w) const {
        return std::none_of(code_.words.begin(), code_.words.end(),
                            [&](const Word& x) { return has_prefix(w, x); });
    }

    /// star[i][j] is true iff w[i..j) factors over X.
    std::vector<std::vector<bool>> star_table(const Word& w) const {
        const std::size_t n = w.size();
        std::vector<std::vector<bool>> star(n + 1, std::vector<bool>(n + 1, false));
        for (std::size_t i = 0; i <= n; ++i) {
            star[i][i] = true;
            for (std::size_t j = i + 1; j <= n; ++j) {
                for (const auto& x : code_.words) {
                    if (x.size() <= j - i && star[i][j - x.size()] &&
                        w.compare(j - x.size(), x.size(), x) == 0) {
                        star[i][j] = true;
                        break;
                    }
                }
            }
        }
        return star;
    }

    bool in_star(const Word& w) const { return star_table(w)[0][w.size()]; }

    /// d_X(w): cut pairs (i, j) with w[0,i) in Q, w[i,j) in X*, w[j,..) in P.
    /// For a code the X*-factorisation of the middle part is unique, so this
    /// is the number of parses.
    std::size_t parse_count(const Word& w) const {
        const std::size_t n = w.size();
        auto star = star_table(w);
        std::vector<bool> q(n + 1), p(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            q[i] = q_test(w.substr(0, i));
            p[i] = p_test(w.substr(i));
        }
        std::size_t count = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (!q[i]) continue;
            for (std::size_t j = i; j <= n; ++j)
                if (star[i][j] && p[j]) ++count;
        }
        return count;
    }

private:
    CodeSet code_;
};

inline std::size_t parse_count(const ParseContext& ctx, const Word& w) { return ctx.parse_count(w); }

enum class CodeMode { prefix, suffix, bifix };

struct MaximalityReport {
    CodeMode mode = CodeMode::prefix;
    bool maximal = false;
    std::optional<Word> witness;  ///< a word of S that the code fails to cover
    std::string reason;
    // bifix mode reports the individual notions side by side
    bool prefix_maximal = false;
    bool suffix_maximal = false;
    bool degree_stable = false;
};

namespace detail {

/// Every member of S of length max_len has a prefix (suffix) in X.
inline std::optional<Word> coverage_gap(const FactorSet& S, const CodeSet& X, bool prefix_side) {
    for (const auto& w : S.of_length(X.max_len)) {
        bool covered = std::any_of(X.words.begin(), X.words.end(), [&](const Word& x) {
            return prefix_side ? has_prefix(w, x) : has_suffix(w, x);
        });
        if (!covered) return w;
    }
    return std::nullopt;
}

} // namespace detail

struct DegreeReport {
    std::size_t degree = 0;
    Word witness;
    bool internal_factor_check = false;
    bool stabilized = false;  ///< max parse count non-decreasing, constant from max_len on
    std::size_t scan_bound = 0;
    std::vector<std::size_t> max_by_length;  ///< index m: max d_X over S ∩ A^m
    std::optional<Word> internal_factor_witness;
};

/// S-degree: max parse count over members of length <= 2 max_len(X).
inline DegreeReport s_degree(const FactorSet& S, const CodeSet& X) {
    const std::size_t scan = 2 * X.max_len;
    if (scan > S.horizon())
        throw horizon_error("degree scan needs horizon >= " + std::to_string(scan));
    require_subset(S, X);
    ParseContext ctx(X);
    DegreeReport rep;
    rep.scan_bound = scan;
    std::vector<std::pair<Word, std::size_t>> counts;
    for (std::size_t m = 0; m <= scan; ++m) {
        std::size_t mx = 0;
        for (const auto& w : S.of_length(m)) {
            const auto d = ctx.parse_count(w);
            counts.emplace_back(w, d);
            if (d > rep.degree) {
                rep.degree = d;
                rep.witness = w;
            }
            mx = std::max(mx, d);
        }
        rep.max_by_length.push_back(mx);
    }
    rep.stabilized = true;
    for (std::size_t m = 1; m <= scan; ++m) {
        if (rep.max_by_length[m] < rep.max_by_length[m - 1]) rep.stabilized = false;
        if (m >= X.max_len && rep.max_by_length[m] != rep.max_by_length[X.max_len])
            rep.stabilized = false;
    }
    rep.internal_factor_check = true;
    for (const auto& [w, d] : counts) {
        const bool internal = std::any_of(X.words.begin(), X.words.end(),
                                          [&](const Word& x) { return is_internal_factor(w, x); });
        if ((d < rep.degree) != internal) {
            rep.internal_factor_check = false;
            if (!rep.internal_factor_witness) rep.internal_factor_witness = w;
        }
    }
    return rep;
}

inline MaximalityReport is_s_maximal(const FactorSet& S, const CodeSet& X, CodeMode mode) {
    if (X.max_len + 1 > S.horizon())
        throw horizon_error("maximality of a code with words of length " +
                            std::to_string(X.max_len) + " is undecidable at horizon " +
                            std::to_string(S.horizon()));
    require_subset(S, X);
    MaximalityReport rep;
    rep.mode = mode;
    auto side = [&](bool prefix_side) -> std::pair<bool, std::optional<Word>> {
        const bool kind_ok = prefix_side ? X.is_prefix_code : X.is_suffix_code;
        auto gap = detail::coverage_gap(S, X, prefix_side);
        return {kind_ok && !gap, gap};
    };
    auto [pm, pgap] = side(true);
    auto [sm, sgap] = side(false);
    rep.prefix_maximal = pm;
    rep.suffix_maximal = sm;
    switch (mode) {
    case CodeMode::prefix:
        rep.maximal = pm;
        rep.witness = pgap;
        if (!X.is_prefix_code) rep.reason = "not a prefix code";
        else if (pgap) rep.reason = "a word of S has no prefix in the code";
        break;
    case CodeMode::suffix:
        rep.maximal = sm;
        rep.witness = sgap;
        if (!X.is_suffix_code) rep.reason = "not a suffix code";
        else if (sgap) rep.reason = "a word of S has no suffix in the code";
        break;
    case CodeMode::bifix: {
        if (!X.is_bifix_code) {
            rep.reason = "not a bifix code";
            break;
        }
        if (2 * X.max_len > S.horizon())
            throw horizon_error("bifix maximality scans parse counts up to length " +
                                std::to_string(2 * X.max_len) + ", beyond the horizon");
        rep.degree_stable = s_degree(S, X).stabilized;
        rep.maximal = rep.degree_stable && pm && sm;
        rep.witness = pgap ? pgap : sgap;
        if (!rep.degree_stable) rep.reason = "parse counts do not stabilise within the horizon";
        else if (!pm || !sm) rep.reason = "a word of S escapes the code";
        break;
    }
    }
    return rep;
}

/// Nonempty proper prefixes of X grouped by parse count: a prefix with j
/// parses lands in class j - 1, so classes 1..n-1 for degree n. Each class is
/// verified to be an S-maximal suffix code.
inline std::vector<CodeSet> prefix_partition(const FactorSet& S, const CodeSet& X) {
    auto maxr = is_s_maximal(S, X, CodeMode::bifix);
    if (!maxr.maximal) throw data_error("prefix partition needs an S-maximal bifix code: " + maxr.reason);
    const auto deg = s_degree(S, X);
    const std::size_t n = deg.degree;
    ParseContext ctx(X);

    std::set<Word> prefixes;
    for (const auto& x : X.words)
        for (std::size_t i = 1; i < x.size(); ++i) prefixes.insert(x.substr(0, i));

    std::map<std::size_t, std::vector<Word>> by_count;
    for (const auto& p : prefixes) {
        const auto d = ctx.parse_count(p);
        if (d < 2 || d > n)
            throw theorem_violation("proper prefix has " + std::to_string(d) +
                                        " parses, outside 2.." + std::to_string(n),
                                    S.render(p));
        by_count[d].push_back(p);
    }
    std::vector<CodeSet> classes;
    for (std::size_t d = 2; d <= n; ++d) {
        auto it = by_count.find(d);
        if (it == by_count.end())
            throw theorem_violation("no proper prefix has " + std::to_string(d) + " parses");
        auto y = code_kind(it->second);
        auto rep = is_s_maximal(S, y, CodeMode::suffix);
        if (!rep.maximal)
            throw theorem_violation("prefix class " + std::to_string(d - 1) +
                                        " is not an S-maximal suffix code: " + rep.reason,
                                    rep.witness ? std::optional<std::string>(S.render(*rep.witness))
                                                : std::nullopt);
        classes.push_back(std::move(y));
    }
    return classes;
}

inline long long rho_sum(const FactorSet& S, const std::vector<Word>& words) {
    long long total = 0;
    for (const auto& w : words) total += rho(S, w);
    return total;
}

/// Given a prefix-closed set containing epsilon, the code whose proper
/// prefixes it is: the children in S of members that are not members.
inline std::optional<CodeSet> code_of_prefix_set(const FactorSet& S, const std::vector<Word>& prefs) {
    std::set<Word> p(prefs.begin(), prefs.end());
    if (!p.contains(Word{})) return std::nullopt;
    std::vector<Word> leaves;
    for (const auto& w : p) {
        if (!w.empty() && !p.contains(w.substr(0, w.size() - 1))) return std::nullopt;
        if (w.size() + 1 > S.horizon()) return std::nullopt;
        for (std::size_t a = 0; a < S.alphabet().size(); ++a) {
            Word c = w + static_cast<char>(a);
            if (S.contains(c) && !p.contains(c)) leaves.push_back(c);
        }
    }
    if (leaves.empty()) return std::nullopt;
    return code_kind(std::move(leaves));
}

struct RhoSumReport {
    long long value = 0;
    std::vector<Check> laws;
};

/// rho(X) together with whichever sum law applies to X: the suffix-code law
/// when X is an S-maximal suffix code, the prefix-set law when X is the set of
/// proper prefixes (with epsilon) of an S-maximal bifix code.
inline RhoSumReport rho_sum_report(const FactorSet& S, const std::vector<Word>& words) {
    RhoSumReport rep;
    rep.value = rho_sum(S, words);
    const long long k = static_cast<long long>(S.alphabet().size());
    const long long chi = characteristic(S);
    const bool has_empty = std::find(words.begin(), words.end(), Word{}) != words.end();
    if (!has_empty && !words.empty()) {
        auto y = code_kind(words);
        if (y.max_len + 1 <= S.horizon() && is_s_maximal(S, y, CodeMode::suffix).maximal) {
            rep.laws.push_back({"rho-suffix-code", "rho(X) = Card(A) - chi(S)",
                                std::to_string(rep.value), std::to_string(k - chi),
                                rep.value == k - chi, std::nullopt,
                                "code of max length " + std::to_string(y.max_len)});
        }
    }
    if (has_empty) {
        if (auto x = code_of_prefix_set(S, words);
            x && x->max_len + 1 <= S.horizon() && 2 * x->max_len <= S.horizon() &&
            is_s_maximal(S, *x, CodeMode::bifix).maximal) {
            const auto n = static_cast<long long>(s_degree(S, *x).degree);
            rep.laws.push_back({"rho-prefix-set", "rho(P) = n(Card(A) - chi(S))",
                                std::to_string(rep.value), std::to_string(n * (k - chi)),
                                rep.value == n * (k - chi), std::nullopt,
                                "degree n = " + std::to_string(n)});
        }
    }
    return rep;
}

/// All proper prefixes of X, epsilon included.
inline std::vector<Word> proper_prefixes(const CodeSet& X) {
    std::set<Word> p;
    for (const auto& x : X.words)
        for (std::size_t i = 0; i < x.size(); ++i) p.insert(x.substr(0, i));
    return {p.begin(), p.end()};
}

/// Card(X) = n(k - chi) + chi for an S-maximal bifix code of degree n.
inline Check verify_cardinality(const FactorSet& S, const CodeSet& X) {
    auto maxr = is_s_maximal(S, X, CodeMode::bifix);
    if (!maxr.maximal)
        throw data_error("cardinality check needs an S-maximal bifix code: " + maxr.reason);
    const auto n = static_cast<long long>(s_degree(S, X).degree);
    const long long k = static_cast<long long>(S.alphabet().size());
    const long long chi = characteristic(S);
    const long long card = static_cast<long long>(X.size());
    const long long expected = n * (k - chi) + chi;
    return {"bifix-cardinality", "Card(X) = n(Card(A) - chi(S)) + chi(S)", std::to_string(card),
            std::to_string(expected) + " (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                ", chi=" + std::to_string(chi) + ")",
            card == expected, std::nullopt, "horizon " + std::to_string(S.horizon())};
}

/// Depth-first enumeration of the bifix codes X ⊆ S with max length <= max_len
/// that are S-maximal prefix codes: complete prefix trees of S whose leaves
/// are pairwise suffix-incomparable.
inline std::vector<CodeSet> enumerate_maximal_bifix_codes(const FactorSet& S, std::size_t max_len) {
    if (max_len + 1 > S.horizon()) throw horizon_error("search depth exceeds horizon");
    std::vector<CodeSet> found;
    std::vector<Word> leaves;
    std::vector<Word> frontier{Word{}};
    const auto k = S.alphabet().size();

    auto suffix_clash = [&](const Word& w) {
        return std::any_of(leaves.begin(), leaves.end(),
                           [&](const Word& x) { return has_suffix(w, x) || has_suffix(x, w); });
    };
    // frontier is a queue represented by an index into a growing vector
    auto dfs = [&](auto&& self, std::size_t head) -> void {
        if (head == frontier.size()) {
            found.push_back(code_kind(leaves));
            return;
        }
        const Word p = frontier[head];
        if (!p.empty() && !suffix_clash(p)) {
            leaves.push_back(p);
            self(self, head + 1);
            leaves.pop_back();
        }
        if (p.size() < max_len) {
            const auto mark = frontier.size();
            for (std::size_t a = 0; a < k; ++a) {
                Word c = p + static_cast<char>(a);
                if (S.contains(c)) frontier.push_back(std::move(c));
            }
            if (frontier.size() > mark) self(self, head + 1);
            frontier.resize(mark);
        }
    };
    dfs(dfs, 0);
    return found;
}

} // namespace neutral
