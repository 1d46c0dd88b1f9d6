#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "neutral/check.hpp"
#include "neutral/factor_set.hpp"
#include "neutral/rational.hpp"

namespace neutral {

/// L(w), R(w), E(w) and the derived counts.
struct ExtensionStats {
    std::vector<Letter> left;
    std::vector<Letter> right;
    std::vector<std::pair<Letter, Letter>> edges;

    long long ell() const { return static_cast<long long>(left.size()); }
    long long r() const { return static_cast<long long>(right.size()); }
    long long e() const { return static_cast<long long>(edges.size()); }
    long long m() const { return e() - ell() - r() + 1; }
};

enum class Side { left, right };

struct Vertex {
    Side side;
    Letter letter;
    auto operator<=>(const Vertex&) const = default;
};

/// The bipartite extension graph on 1⊗L(w) ∪ R(w)⊗1.
struct ExtensionGraph {
    ExtensionStats stats;
    std::vector<std::vector<Vertex>> components;
    bool acyclic = true;

    std::size_t vertex_count() const { return stats.left.size() + stats.right.size(); }
    bool is_tree() const { return acyclic && components.size() == 1; }

    /// Index of the component holding `v`, if `v` is a vertex.
    std::optional<std::size_t> component_of(Vertex v) const {
        for (std::size_t i = 0; i < components.size(); ++i)
            if (std::find(components[i].begin(), components[i].end(), v) != components[i].end())
                return i;
        return std::nullopt;
    }
};

namespace detail {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

inline void require_two_sided(const FactorSet& S, const Word& w) {
    if (w.size() + 2 > S.horizon())
        throw horizon_error("word '" + S.render(w) + "' of length " + std::to_string(w.size()) +
                            " needs horizon >= " + std::to_string(w.size() + 2) + " (have " +
                            std::to_string(S.horizon()) + ")");
    if (!S.contains(w)) throw data_error("word '" + S.render(w) + "' is not in the set");
}

} // namespace detail

inline ExtensionStats extension_stats(const FactorSet& S, const Word& w) {
    detail::require_two_sided(S, w);
    ExtensionStats st;
    const auto k = S.alphabet().size();
    for (std::size_t a = 0; a < k; ++a) {
        const char ca = static_cast<char>(a);
        if (S.contains(ca + w)) st.left.push_back(static_cast<Letter>(a));
        if (S.contains(w + ca)) st.right.push_back(static_cast<Letter>(a));
    }
    for (Letter a : st.left)
        for (Letter b : st.right)
            if (S.contains(static_cast<char>(a) + w + static_cast<char>(b))) st.edges.emplace_back(a, b);
    return st;
}

inline ExtensionGraph extension_graph(const FactorSet& S, const Word& w) {
    ExtensionGraph g;
    g.stats = extension_stats(S, w);
    const auto& st = g.stats;
    const auto k = S.alphabet().size();
    // slots 0..k-1 are left copies, k..2k-1 right copies
    detail::DisjointSets ds(2 * k);
    for (auto [a, b] : st.edges)
        if (!ds.unite(a, k + b)) g.acyclic = false;
    std::map<std::size_t, std::vector<Vertex>> groups;
    for (Letter a : st.left) groups[ds.find(a)].push_back({Side::left, a});
    for (Letter b : st.right) groups[ds.find(k + b)].push_back({Side::right, b});
    for (auto& [root, vs] : groups) {
        std::sort(vs.begin(), vs.end());
        g.components.push_back(std::move(vs));
    }
    std::sort(g.components.begin(), g.components.end());
    return g;
}

inline long long multiplicity(const FactorSet& S, const Word& w) {
    return extension_stats(S, w).m();
}

inline int characteristic(const FactorSet& S) {
    return static_cast<int>(1 - multiplicity(S, Word{}));
}

inline long long rho(const FactorSet& S, const Word& x) {
    auto st = extension_stats(S, x);
    return st.e() - st.ell();
}

inline long long lambda(const FactorSet& S, const Word& x) {
    auto st = extension_stats(S, x);
    return st.e() - st.r();
}

/// rho(x) / rho(epsilon); undefined when rho(epsilon) = 0 (characteristic = Card(A)).
inline Rational rho_normalized(const FactorSet& S, const Word& x) {
    const long long base = rho(S, Word{});
    if (base == 0) throw data_error("rho(epsilon) = 0: the set has characteristic Card(A)");
    return Rational(rho(S, x)) / Rational(base);
}

/// Neutral/tree classification up to a word-length bound.
struct Classification {
    std::size_t bound = 0;
    int characteristic = 0;
    std::optional<Word> neutral_witness;  ///< shortest, then least, nonempty word with m != 0
    std::optional<Word> tree_witness;     ///< shortest word whose graph breaks the tree condition
    std::vector<std::pair<Word, std::string>> failures;

    bool neutral() const { return !neutral_witness; }
    bool tree() const { return !tree_witness; }
    /// Largest length up to which every nonempty word is neutral.
    std::size_t neutral_up_to() const { return neutral_witness ? neutral_witness->size() - 1 : bound; }
    std::size_t tree_up_to() const {
        if (!tree_witness) return bound;
        return tree_witness->empty() ? 0 : tree_witness->size() - 1;
    }
};

inline Classification classify(const FactorSet& S, std::size_t bound) {
    if (bound + 2 > S.horizon())
        throw horizon_error("classification bound " + std::to_string(bound) +
                            " exceeds horizon - 2 = " + std::to_string(S.horizon() - 2));
    Classification c;
    c.bound = bound;
    c.characteristic = characteristic(S);
    {
        auto g = extension_graph(S, Word{});
        // A forest of chi trees is exactly an acyclic graph, since then the
        // component count equals vertices - edges = 1 - m(epsilon).
        if (!g.acyclic) {
            c.tree_witness = Word{};
            c.failures.emplace_back(Word{}, "E(epsilon) has a cycle");
        }
    }
    for (std::size_t n = 1; n <= bound; ++n) {
        for (const auto& w : S.of_length(n)) {
            auto g = extension_graph(S, w);
            const long long m = g.stats.m();
            if (m != 0) {
                if (!c.neutral_witness) c.neutral_witness = w;
                c.failures.emplace_back(w, "m = " + std::to_string(m));
            }
            if (!g.is_tree()) {
                if (!c.tree_witness) c.tree_witness = w;
                c.failures.emplace_back(w, g.acyclic ? "E(w) is disconnected" : "E(w) has a cycle");
            }
        }
    }
    return c;
}

struct ComplexityProfile {
    std::vector<long long> p;  ///< p_0 .. p_N
    std::vector<long long> s;  ///< s_0 .. s_{N-1}
    std::vector<long long> b;  ///< b_0 .. b_{N-2}
};

struct ComplexityReport {
    ComplexityProfile profile;
    std::vector<Check> checks;
};

inline ComplexityProfile factor_complexity(const FactorSet& S) {
    ComplexityProfile prof;
    const auto N = S.horizon();
    for (std::size_t n = 0; n <= N; ++n) prof.p.push_back(static_cast<long long>(S.count(n)));
    for (std::size_t n = 0; n < N; ++n) prof.s.push_back(prof.p[n + 1] - prof.p[n]);
    for (std::size_t n = 0; n + 1 < N; ++n) prof.b.push_back(prof.s[n + 1] - prof.s[n]);
    return prof;
}

/// Complexity sequences plus the two summation identities and, for a set
/// that is neutral within the horizon, the linear complexity formula.
inline ComplexityReport complexity_profile(const FactorSet& S) {
    const auto N = S.horizon();
    if (N < 3) throw horizon_error("complexity identities need horizon >= 3");
    ComplexityReport rep;
    rep.profile = factor_complexity(S);
    const auto& prof = rep.profile;

    std::vector<long long> sum_m, sum_r;
    std::optional<std::size_t> bad_b, bad_s;
    for (std::size_t n = 0; n + 2 <= N; ++n) {
        long long sm = 0, sr = 0;
        for (const auto& w : S.of_length(n)) {
            auto st = extension_stats(S, w);
            sm += st.m();
            sr += st.r() - 1;
        }
        sum_m.push_back(sm);
        sum_r.push_back(sr);
        if (sm != prof.b[n] && !bad_b) bad_b = n;
        if (sr != prof.s[n] && !bad_s) bad_s = n;
    }
    const std::string range = "0 <= n <= " + std::to_string(N - 2);
    std::vector<long long> b_head(prof.b.begin(), prof.b.begin() + static_cast<long>(sum_m.size()));
    std::vector<long long> s_head(prof.s.begin(), prof.s.begin() + static_cast<long>(sum_r.size()));
    rep.checks.push_back({"second-difference-identity", "b_n = sum_{|w|=n} m(w)",
                          render_sequence(b_head), render_sequence(sum_m), !bad_b,
                          bad_b ? std::optional<std::string>("n = " + std::to_string(*bad_b))
                                : std::nullopt,
                          range});
    rep.checks.push_back({"first-difference-identity", "s_n = sum_{|w|=n} (r(w) - 1)",
                          render_sequence(s_head), render_sequence(sum_r), !bad_s,
                          bad_s ? std::optional<std::string>("n = " + std::to_string(*bad_s))
                                : std::nullopt,
                          range});

    auto cls = classify(S, N - 2);
    if (cls.neutral()) {
        const long long k = static_cast<long long>(S.alphabet().size());
        const long long chi = cls.characteristic;
        std::vector<long long> expected;
        std::optional<std::size_t> bad;
        for (std::size_t n = 1; n <= N; ++n) {
            expected.push_back(static_cast<long long>(n) * (k - chi) + chi);
            if (expected.back() != prof.p[n] && !bad) bad = n;
        }
        std::vector<long long> actual(prof.p.begin() + 1, prof.p.end());
        rep.checks.push_back({"linear-complexity", "p_n = n(k - chi) + chi",
                              render_sequence(actual), render_sequence(expected), !bad,
                              bad ? std::optional<std::string>("n = " + std::to_string(*bad))
                                  : std::nullopt,
                              "1 <= n <= " + std::to_string(N)});
    }
    return rep;
}

/// sum_{a in L(x)} rho(ax) = rho(x) and sum_{a in R(x)} lambda(xa) = lambda(x)
/// for every member x with |x| <= bound (bound <= N - 3), plus nonnegativity.
inline std::vector<Check> rho_telescoping(const FactorSet& S, std::size_t bound) {
    if (bound + 3 > S.horizon()) throw horizon_error("telescoping bound exceeds horizon - 3");
    std::optional<Word> bad_rho, bad_lambda, bad_sign;
    std::size_t tested = 0;
    for (std::size_t n = 0; n <= bound; ++n) {
        for (const auto& x : S.of_length(n)) {
            ++tested;
            auto st = extension_stats(S, x);
            long long left_sum = 0, right_sum = 0;
            for (Letter a : st.left) left_sum += rho(S, static_cast<char>(a) + x);
            for (Letter a : st.right) right_sum += lambda(S, x + static_cast<char>(a));
            const long long rx = st.e() - st.ell(), lx = st.e() - st.r();
            if (left_sum != rx && !bad_rho) bad_rho = x;
            if (right_sum != lx && !bad_lambda) bad_lambda = x;
            if ((rx < 0 || lx < 0) && !bad_sign) bad_sign = x;
        }
    }
    const std::string range = "|x| <= " + std::to_string(bound);
    auto wit = [&](const std::optional<Word>& w) {
        return w ? std::optional<std::string>("x = '" + S.render(*w) + "'") : std::nullopt;
    };
    const std::string count = std::to_string(tested) + " words";
    return {
        {"rho-telescoping", "sum_{a in L(x)} rho(ax) = rho(x)", count, bad_rho ? "violated" : count,
         !bad_rho, wit(bad_rho), range},
        {"lambda-telescoping", "sum_{a in R(x)} lambda(xa) = lambda(x)", count,
         bad_lambda ? "violated" : count, !bad_lambda, wit(bad_lambda), range},
        {"rho-lambda-nonnegative", "rho(x) >= 0 and lambda(x) >= 0", count,
         bad_sign ? "violated" : count, !bad_sign, wit(bad_sign), range},
    };
}

/// Bounded evidence of recurrence and uniform recurrence.
struct RecurrenceReport {
    std::size_t bound = 0;
    bool recurrent = true;
    std::optional<std::pair<Word, Word>> failing_pair;
    /// For each probed word u, the least n <= N such that u occurs in every
    /// member of length n; nullopt when no such n exists within the horizon.
    std::vector<std::pair<Word, std::optional<std::size_t>>> occurrence_radius;
    std::optional<std::size_t> uniform_radius;  ///< max of the above when all are defined
};

/// Looks for connectors v with uvw in S for all nonempty u, w with
/// |u| + |w| <= bound, and measures occurrence radii of words of length <=
/// radius_len.
inline RecurrenceReport recurrence_report(const FactorSet& S, std::size_t bound,
                                          std::size_t radius_len = 2) {
    const auto N = S.horizon();
    if (bound > N) throw horizon_error("recurrence bound exceeds horizon");
    RecurrenceReport rep;
    rep.bound = bound;

    std::set<std::pair<Word, Word>> connected;
    for (const auto& y : S.sorted_words()) {
        for (std::size_t i = 1; i < y.size(); ++i)
            for (std::size_t j = 1; i + j <= y.size() && i + j <= bound; ++j)
                connected.emplace(y.substr(0, i), y.substr(y.size() - j));
    }
    for (std::size_t total = 2; total <= bound && rep.recurrent; ++total) {
        for (std::size_t lu = 1; lu < total && rep.recurrent; ++lu) {
            for (const auto& u : S.of_length(lu)) {
                bool found_gap = false;
                for (const auto& w : S.of_length(total - lu)) {
                    if (!connected.contains({u, w})) {
                        rep.recurrent = false;
                        rep.failing_pair = {u, w};
                        found_gap = true;
                        break;
                    }
                }
                if (found_gap) break;
            }
        }
    }

    bool all_defined = true;
    std::size_t radius = 0;
    for (std::size_t n = 1; n <= std::min(radius_len, N); ++n) {
        for (const auto& u : S.of_length(n)) {
            std::optional<std::size_t> r;
            for (std::size_t m = n; m <= N && !r; ++m) {
                const auto& ws = S.of_length(m);
                if (!ws.empty() && std::all_of(ws.begin(), ws.end(), [&](const Word& y) {
                        return y.find(u) != Word::npos;
                    }))
                    r = m;
            }
            if (r) radius = std::max(radius, *r);
            else all_defined = false;
            rep.occurrence_radius.emplace_back(u, r);
        }
    }
    if (all_defined) rep.uniform_radius = radius;
    return rep;
}

} // namespace neutral
