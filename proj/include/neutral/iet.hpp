#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "neutral/check.hpp"
#include "neutral/extension.hpp"
#include "neutral/factor_set.hpp"
#include "neutral/quadratic.hpp"

namespace neutral {

/// Open interval ]lo, hi[ with the orientation of the affine map that produced it.
class IntervalQ {
public:
    IntervalQ() = default;  // the empty interval
    IntervalQ(QuadraticReal lo, QuadraticReal hi, int orientation = +1)
        : lo_(std::move(lo)), hi_(std::move(hi)), orientation_(orientation), empty_(!(lo_ < hi_)) {
        if (empty_) *this = IntervalQ{};
    }

    static IntervalQ empty() { return {}; }

    bool is_empty() const noexcept { return empty_; }
    const QuadraticReal& lo() const { return lo_; }
    const QuadraticReal& hi() const { return hi_; }
    int orientation() const noexcept { return orientation_; }
    QuadraticReal length() const { return empty_ ? QuadraticReal{} : hi_ - lo_; }

    bool contains(const QuadraticReal& x) const { return !empty_ && lo_ < x && x < hi_; }
    /// Closure containment of another interval.
    bool covers(const IntervalQ& o) const {
        return !empty_ && !o.empty_ && lo_ <= o.lo_ && o.hi_ <= hi_;
    }

    friend IntervalQ intersect(const IntervalQ& a, const IntervalQ& b) {
        if (a.empty_ || b.empty_) return {};
        return {std::max(a.lo_, b.lo_), std::min(a.hi_, b.hi_), a.orientation_};
    }
    friend bool meets(const IntervalQ& a, const IntervalQ& b) { return !intersect(a, b).is_empty(); }

    friend bool operator==(const IntervalQ& a, const IntervalQ& b) {
        if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

    std::string str() const { return empty_ ? "{}" : "]" + lo_.str() + ", " + hi_.str() + "["; }

private:
    QuadraticReal lo_;
    QuadraticReal hi_;
    int orientation_ = +1;
    bool empty_ = true;
};

/// x -> sign * x + shift with sign = +1 (translation) or -1 (symmetry).
struct AffineMap {
    int sign = +1;
    QuadraticReal shift;

    QuadraticReal operator()(const QuadraticReal& x) const { return sign > 0 ? x + shift : shift - x; }
    QuadraticReal inverse(const QuadraticReal& y) const { return sign > 0 ? y - shift : shift - y; }

    IntervalQ image(const IntervalQ& i) const {
        if (i.is_empty()) return {};
        auto a = (*this)(i.lo()), b = (*this)(i.hi());
        const int orient = i.orientation() * sign;
        return sign > 0 ? IntervalQ(a, b, orient) : IntervalQ(b, a, orient);
    }
    IntervalQ preimage(const IntervalQ& j) const {
        if (j.is_empty()) return {};
        auto a = inverse(j.lo()), b = inverse(j.hi());
        return sign > 0 ? IntervalQ(a, b) : IntervalQ(b, a);
    }
    /// (*this) after `first`.
    AffineMap after(const AffineMap& first) const {
        return {sign * first.sign, sign > 0 ? first.shift + shift : shift - first.shift};
    }
};

/// Interval exchange data: two orders, exact lengths, flipped letters.
struct IETSpec {
    Alphabet alphabet;
    std::vector<Letter> order1;  ///< letters left to right in the top partition
    std::vector<Letter> order2;  ///< letters left to right in the bottom partition
    std::vector<QuadraticReal> lengths;  ///< indexed by letter
    std::vector<bool> flips;             ///< indexed by letter
    QuadraticReal left{0};
    std::optional<QuadraticReal> right;  ///< defaults to left + sum of lengths
};

/// A validated interval exchange transformation.
class IntervalExchange {
public:
    explicit IntervalExchange(IETSpec spec) : spec_(std::move(spec)) {
        const auto k = spec_.alphabet.size();
        auto is_perm = [k](const std::vector<Letter>& o) {
            if (o.size() != k) return false;
            std::vector<bool> seen(k, false);
            for (Letter a : o) {
                if (a >= k || seen[a]) return false;
                seen[a] = true;
            }
            return true;
        };
        if (!is_perm(spec_.order1) || !is_perm(spec_.order2))
            throw data_error("orders must be permutations of the alphabet");
        if (spec_.lengths.size() != k) throw data_error("need one length per letter");
        if (spec_.flips.empty()) spec_.flips.assign(k, false);
        if (spec_.flips.size() != k) throw data_error("need one flip flag per letter");
        QuadraticReal total;
        for (std::size_t a = 0; a < k; ++a) {
            if (spec_.lengths[a].sign() <= 0)
                throw data_error("length of '" + spec_.alphabet.name(static_cast<Letter>(a)) +
                                 "' is not positive");
            total += spec_.lengths[a];
        }
        if (!spec_.right) spec_.right = spec_.left + total;
        if (*spec_.right - spec_.left != total)
            throw data_error("interval lengths do not sum to the domain length");

        gamma_.resize(k);
        delta_.resize(k);
        QuadraticReal g = spec_.left, d = spec_.left;
        for (Letter a : spec_.order1) {
            gamma_[a] = g;
            g += spec_.lengths[a];
        }
        for (Letter a : spec_.order2) {
            delta_[a] = d;
            d += spec_.lengths[a];
        }
        rules_.resize(k);
        for (std::size_t a = 0; a < k; ++a) {
            if (spec_.flips[a]) rules_[a] = {-1, delta_[a] + gamma_[a] + spec_.lengths[a]};
            else rules_[a] = {+1, delta_[a] - gamma_[a]};
        }
    }

    const IETSpec& spec() const noexcept { return spec_; }
    const Alphabet& alphabet() const noexcept { return spec_.alphabet; }
    std::size_t letters() const noexcept { return spec_.alphabet.size(); }
    IntervalQ domain() const { return {spec_.left, *spec_.right}; }

    const QuadraticReal& gamma(Letter a) const { return gamma_.at(a); }
    const QuadraticReal& delta(Letter a) const { return delta_.at(a); }
    const QuadraticReal& length(Letter a) const { return spec_.lengths.at(a); }
    bool flipped(Letter a) const { return spec_.flips.at(a); }
    const AffineMap& rule(Letter a) const { return rules_.at(a); }

    IntervalQ top(Letter a) const { return {gamma_[a], gamma_[a] + length(a)}; }     ///< I_a
    IntervalQ bottom(Letter a) const { return {delta_[a], delta_[a] + length(a)}; }  ///< J_a

    /// Left endpoints of I_a other than the domain's: the singularities of T.
    std::vector<QuadraticReal> singularities() const { return internal(spec_.order1, gamma_); }
    /// Left endpoints of J_a other than the domain's: the singularities of T^-1.
    std::vector<QuadraticReal> inverse_singularities() const { return internal(spec_.order2, delta_); }

    Letter letter_at(const QuadraticReal& x) const {
        for (std::size_t a = 0; a < letters(); ++a)
            if (top(static_cast<Letter>(a)).contains(x)) return static_cast<Letter>(a);
        if (!domain().contains(x)) throw data_error("point " + x.str() + " outside the domain");
        throw singularity_error("point " + x.str() + " is a singularity of T");
    }

    QuadraticReal apply(const QuadraticReal& x) const { return rules_[letter_at(x)](x); }

    QuadraticReal apply_inverse(const QuadraticReal& y) const {
        for (std::size_t a = 0; a < letters(); ++a)
            if (bottom(static_cast<Letter>(a)).contains(y)) return rules_[a].inverse(y);
        if (!domain().contains(y)) throw data_error("point " + y.str() + " outside the domain");
        throw singularity_error("point " + y.str() + " is a singularity of T^-1");
    }

private:
    static std::vector<QuadraticReal> internal(const std::vector<Letter>& order,
                                               const std::vector<QuadraticReal>& ends) {
        std::vector<QuadraticReal> out;
        for (std::size_t i = 1; i < order.size(); ++i) out.push_back(ends[order[i]]);
        return out;
    }

    IETSpec spec_;
    std::vector<QuadraticReal> gamma_, delta_;
    std::vector<AffineMap> rules_;
};

inline IntervalExchange make_iet(IETSpec spec) { return IntervalExchange(std::move(spec)); }

/// I_w (points whose coding starts with w), J_w = T^{|w|}(I_w) and the
/// affine restriction of T^{|w|} to I_w.
struct CodingCell {
    IntervalQ start;  ///< I_w
    IntervalQ end;    ///< J_w
    AffineMap map;
};

inline CodingCell coding_cell(const IntervalExchange& T, const Word& w) {
    CodingCell cell{T.domain(), T.domain(), {}};
    for (char c : w) {
        const auto a = static_cast<Letter>(c);
        auto piece = intersect(cell.end, T.top(a));
        if (piece.is_empty()) return {IntervalQ::empty(), IntervalQ::empty(), {}};
        cell.end = T.rule(a).image(piece);
        cell.map = T.rule(a).after(cell.map);
    }
    cell.start = cell.map.preimage(cell.end);
    return cell;
}

/// The natural coding L(T) up to length N with the coding tree cells.
class NaturalCoding {
public:
    NaturalCoding(FactorSet language, std::map<Word, CodingCell> cells)
        : language_(std::move(language)), cells_(std::move(cells)) {}

    const FactorSet& language() const noexcept { return language_; }
    const std::map<Word, CodingCell>& cells() const noexcept { return cells_; }

    /// (I_w, J_w); both empty when w is not in L(T).
    std::pair<IntervalQ, IntervalQ> interval_of_word(const Word& w) const {
        auto it = cells_.find(w);
        if (it == cells_.end()) return {IntervalQ::empty(), IntervalQ::empty()};
        return {it->second.start, it->second.end};
    }

private:
    FactorSet language_;
    std::map<Word, CodingCell> cells_;
};

/// Breadth-first coding tree: wa exists iff J_w ∩ I_a is nonempty, and then
/// J_wa = T(J_w ∩ I_a).
inline NaturalCoding natural_coding(const IntervalExchange& T, std::size_t N) {
    if (N < 2) throw data_error("horizon must be at least 2");
    std::map<Word, CodingCell> cells;
    cells.emplace(Word{}, CodingCell{T.domain(), T.domain(), {}});
    std::vector<Word> layer{Word{}};
    for (std::size_t n = 1; n <= N; ++n) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            const auto& cell = cells.at(w);
            for (std::size_t a = 0; a < T.letters(); ++a) {
                const auto la = static_cast<Letter>(a);
                auto piece = intersect(cell.end, T.top(la));
                if (piece.is_empty()) continue;
                CodingCell child;
                child.end = T.rule(la).image(piece);
                child.map = T.rule(la).after(cell.map);
                child.start = child.map.preimage(child.end);
                Word wa = w + static_cast<char>(la);
                cells.emplace(wa, std::move(child));
                next.push_back(std::move(wa));
            }
        }
        layer = std::move(next);
    }
    std::unordered_set<Word> words;
    for (const auto& [w, c] : cells) words.insert(w);
    FactorSet lang(T.alphabet(), N, std::move(words), "natural coding of an interval exchange");
    if (auto bad = lang.non_biextendable(); !bad.empty())
        throw data_error("natural coding is not biextendable at '" + lang.render(bad.front()) + "'");
    return NaturalCoding(std::move(lang), std::move(cells));
}

/// First `len` letters of the itinerary of z; every orbit point must avoid
/// the partition boundaries.
inline Word sigma_coding(const IntervalExchange& T, QuadraticReal z, std::size_t len) {
    Word out;
    for (std::size_t n = 0; n < len; ++n) {
        Letter a;
        try {
            a = T.letter_at(z);
        } catch (const singularity_error&) {
            throw singularity_error("orbit hits a singularity at step " + std::to_string(n) + " (" +
                                    z.str() + ")");
        }
        out.push_back(static_cast<char>(a));
        if (n + 1 < len) z = T.rule(a)(z);
    }
    return out;
}

struct Connection {
    QuadraticReal from;  ///< singularity of T^-1
    QuadraticReal to;    ///< singularity of T
    std::size_t length = 0;
};

struct ConnectionReport {
    std::vector<Connection> connections;
    std::vector<IntervalQ> components;
    std::size_t search_bound = 0;

    bool only_length_zero() const {
        return std::all_of(connections.begin(), connections.end(),
                           [](const Connection& c) { return c.length == 0; });
    }
    /// Index of the component that contains `i`, if any.
    std::optional<std::size_t> component_of(const IntervalQ& i) const {
        for (std::size_t c = 0; c < components.size(); ++c)
            if (components[c].covers(i)) return c;
        return std::nullopt;
    }
};

/// Forward orbits of the singularities of T^-1, tested exactly against the
/// singularities of T for 0 <= n <= K. Absence means "none within K".
inline ConnectionReport find_connections(const IntervalExchange& T, std::size_t K) {
    ConnectionReport rep;
    rep.search_bound = K;
    const auto targets = T.singularities();
    auto is_target = [&](const QuadraticReal& x) {
        return std::find(targets.begin(), targets.end(), x) != targets.end();
    };
    for (const auto& x : T.inverse_singularities()) {
        QuadraticReal orbit = x;
        for (std::size_t n = 0; n <= K; ++n) {
            if (is_target(orbit)) {
                rep.connections.push_back({x, orbit, n});
                break;
            }
            if (n < K) orbit = T.apply(orbit);
        }
    }
    std::sort(rep.connections.begin(), rep.connections.end(),
              [](const Connection& a, const Connection& b) { return a.to < b.to; });

    std::vector<QuadraticReal> cuts;
    for (const auto& c : rep.connections)
        if (c.length == 0) cuts.push_back(c.to);
    std::sort(cuts.begin(), cuts.end());
    QuadraticReal lo = T.domain().lo();
    for (const auto& c : cuts) {
        rep.components.emplace_back(lo, c);
        lo = c;
    }
    rep.components.emplace_back(lo, T.domain().hi());
    return rep;
}

struct IetNeutralReport {
    ConnectionReport connections;
    NaturalCoding coding;
    Classification classification;
    std::vector<Check> checks;
    std::string note;
};

/// Natural coding checked to be a tree set whose characteristic is the
/// number of components of I, plus the two interval lemmas on short words.
/// Refuses when a connection of length >= 1 is found within K.
inline IetNeutralReport verify_iet_neutral(const IntervalExchange& T, std::size_t N, std::size_t K,
                                           std::size_t lemma_bound = 4) {
    auto conns = find_connections(T, K);
    if (!conns.only_length_zero()) {
        for (const auto& c : conns.connections)
            if (c.length > 0)
                throw data_error("hypothesis fails: connection of length " + std::to_string(c.length) +
                                 " from " + c.from.str() + " to " + c.to.str());
    }
    if (N < 3) throw horizon_error("IET verification needs horizon >= 3");
    auto coding = natural_coding(T, N);
    const auto& S = coding.language();
    auto cls = classify(S, N - 2);
    const auto comps = static_cast<long long>(conns.components.size());

    IetNeutralReport rep{conns, coding, cls, {},
                         "characteristic compared with the number of components of I, i.e. one more "
                         "than the number of length-0 connections"};
    auto render_opt = [&](const std::optional<Word>& w) {
        return w ? std::optional<std::string>("'" + S.render(*w) + "'") : std::nullopt;
    };
    const std::string range = "|w| <= " + std::to_string(N - 2);
    rep.checks.push_back({"iet-neutral", "L(T) is neutral", "neutral up to " + std::to_string(cls.neutral_up_to()),
                          "neutral up to " + std::to_string(N - 2), cls.neutral(),
                          render_opt(cls.neutral_witness), range});
    rep.checks.push_back({"iet-tree", "L(T) is a tree set", "tree up to " + std::to_string(cls.tree_up_to()),
                          "tree up to " + std::to_string(N - 2), cls.tree(), render_opt(cls.tree_witness),
                          range});
    rep.checks.push_back({"iet-characteristic", "chi(L(T)) = number of components of I",
                          std::to_string(cls.characteristic), std::to_string(comps),
                          cls.characteristic == comps, std::nullopt,
                          "connections searched up to K = " + std::to_string(K)});

    // coding tree consistency
    std::optional<Word> bad_cell;
    for (const auto& [w, cell] : coding.cells()) {
        const bool ok = !cell.start.is_empty() && cell.map.image(cell.start) == cell.end &&
                        cell.start.length() == cell.end.length();
        if (!ok && !bad_cell) bad_cell = w;
    }
    rep.checks.push_back({"coding-tree-consistency", "I_w nonempty, J_w = T^|w|(I_w), |I_w| = |J_w|",
                          std::to_string(coding.cells().size()) + " cells",
                          bad_cell ? "violated" : std::to_string(coding.cells().size()) + " cells",
                          !bad_cell, render_opt(bad_cell), "|w| <= " + std::to_string(N)});

    const std::size_t lb = std::min(lemma_bound, N - 2);
    std::optional<Word> bad_l1, bad_l2;
    std::size_t tested = 0;
    for (std::size_t n = 0; n <= lb; ++n) {
        for (const auto& w : S.of_length(n)) {
            ++tested;
            auto [Iw, Jw] = coding.interval_of_word(w);
            if (n > 0) {
                for (std::size_t a = 0; a < T.letters(); ++a) {
                    const auto la = static_cast<Letter>(a);
                    const bool left = S.contains(static_cast<char>(a) + w);
                    const bool right = S.contains(w + static_cast<char>(a));
                    if ((left != meets(Iw, T.bottom(la)) || right != meets(T.top(la), Jw)) && !bad_l1)
                        bad_l1 = w;
                }
            }
            auto g = extension_graph(S, w);
            auto same_side = [&](Side side) {
                const auto& ls = side == Side::left ? g.stats.left : g.stats.right;
                for (Letter a : ls)
                    for (Letter b : ls) {
                        const bool graph_same = g.component_of({side, a}) == g.component_of({side, b});
                        auto ia = side == Side::left ? T.bottom(a) : T.top(a);
                        auto ib = side == Side::left ? T.bottom(b) : T.top(b);
                        auto ca = conns.component_of(ia), cb = conns.component_of(ib);
                        if (!ca || !cb || graph_same != (*ca == *cb)) return false;
                    }
                return true;
            };
            if ((!same_side(Side::left) || !same_side(Side::right)) && !bad_l2) bad_l2 = w;
        }
    }
    const std::string lrange = "|w| <= " + std::to_string(lb);
    rep.checks.push_back({"iet-extension-intervals", "a in L(w) iff I_w meets J_a; a in R(w) iff I_a meets J_w",
                          std::to_string(tested) + " words", bad_l1 ? "violated" : std::to_string(tested) + " words",
                          !bad_l1, render_opt(bad_l1), lrange});
    rep.checks.push_back({"iet-extension-components",
                          "letters share a component of E(w) iff their intervals share a component of I",
                          std::to_string(tested) + " words", bad_l2 ? "violated" : std::to_string(tested) + " words",
                          !bad_l2, render_opt(bad_l2), lrange});
    return rep;
}

} // namespace neutral
