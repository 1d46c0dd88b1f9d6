#pragma once

#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "neutral/bifix.hpp"
#include "neutral/check.hpp"
#include "neutral/decoding.hpp"
#include "neutral/factor_set.hpp"
#include "neutral/iet.hpp"
#include "neutral/returns.hpp"

namespace neutral::io {

using json = nlohmann::ordered_json;

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw parse_error(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw parse_error(std::string(what) + " must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

inline Rational rational_field(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw parse_error("rationals must be exact strings such as \"3/2\"");
}

} // namespace detail

/// {"alphabet":[...], "rules":{"a":"ab",...}, "seed":"a"}
struct MorphismInput {
    Morphism sigma;
    Letter seed;
};

inline MorphismInput parse_morphism(const json& j) {
    Alphabet alphabet(detail::string_list(detail::field(j, "alphabet"), "alphabet"));
    const auto& rules = detail::field(j, "rules");
    if (!rules.is_object() || rules.empty()) throw parse_error("'rules' must be a nonempty object");
    std::vector<Word> images(alphabet.size());
    std::vector<bool> seen(alphabet.size(), false);
    for (const auto& [name, image] : rules.items()) {
        const Letter a = alphabet.letter(name);
        if (!image.is_string()) throw parse_error("rule for '" + name + "' must be a string");
        images[a] = alphabet.parse(image.get<std::string>());
        if (images[a].empty()) throw parse_error("rule for '" + name + "' is empty");
        seen[a] = true;
    }
    for (std::size_t a = 0; a < seen.size(); ++a)
        if (!seen[a]) throw parse_error("no rule for '" + alphabet.name(static_cast<Letter>(a)) + "'");
    const auto& seed = detail::field(j, "seed");
    if (!seed.is_string()) throw parse_error("'seed' must be a symbol");
    const Letter s = alphabet.letter(seed.get<std::string>());
    return {Morphism(alphabet, std::move(images)), s};
}

inline json to_json(const MorphismInput& m) {
    json rules = json::object();
    for (std::size_t a = 0; a < m.sigma.images.size(); ++a)
        rules[m.sigma.source.name(static_cast<Letter>(a))] = m.sigma.target.render(m.sigma.images[a]);
    return {{"alphabet", m.sigma.source.names()}, {"rules", rules}, {"seed", m.sigma.source.name(m.seed)}};
}

inline json to_json(const QuadraticReal& x) {
    return {{"p", x.p().str()}, {"q", x.q().str()}};
}

inline QuadraticReal quadratic_from_json(const json& j, std::int64_t d) {
    if (j.is_string() || j.is_number_integer()) return QuadraticReal(detail::rational_field(j));
    if (!j.is_object()) throw parse_error("lengths must be {\"p\":..., \"q\":...}");
    Rational p = j.contains("p") ? detail::rational_field(j.at("p")) : Rational(0);
    Rational q = j.contains("q") ? detail::rational_field(j.at("q")) : Rational(0);
    return QuadraticReal(std::move(p), std::move(q), d);
}

/// {"d":5, "alphabet":[...], "order1":[...], "order2":[...],
///  "lengths":{"a":{"p":"-2","q":"1"},...}, "flips":[...]}
inline IETSpec parse_iet(const json& j) {
    std::int64_t d = 1;
    if (j.contains("d")) {
        if (!j.at("d").is_number_integer()) throw parse_error("'d' must be an integer");
        d = j.at("d").get<std::int64_t>();
    }
    IETSpec spec;
    spec.alphabet = Alphabet(detail::string_list(detail::field(j, "alphabet"), "alphabet"));
    auto order = [&](const char* key) {
        std::vector<Letter> out;
        for (const auto& s : detail::string_list(detail::field(j, key), key))
            out.push_back(spec.alphabet.letter(s));
        return out;
    };
    spec.order1 = order("order1");
    spec.order2 = order("order2");
    const auto& lengths = detail::field(j, "lengths");
    if (!lengths.is_object()) throw parse_error("'lengths' must be an object");
    spec.lengths.assign(spec.alphabet.size(), QuadraticReal{});
    std::vector<bool> seen(spec.alphabet.size(), false);
    for (const auto& [name, v] : lengths.items()) {
        const Letter a = spec.alphabet.letter(name);
        spec.lengths[a] = quadratic_from_json(v, d);
        seen[a] = true;
    }
    for (std::size_t a = 0; a < seen.size(); ++a)
        if (!seen[a]) throw parse_error("no length for '" + spec.alphabet.name(static_cast<Letter>(a)) + "'");
    spec.flips.assign(spec.alphabet.size(), false);
    if (j.contains("flips"))
        for (const auto& s : detail::string_list(j.at("flips"), "flips"))
            spec.flips[spec.alphabet.letter(s)] = true;
    if (j.contains("domain")) {
        const auto& dom = j.at("domain");
        spec.left = quadratic_from_json(detail::field(dom, "lo"), d);
        spec.right = quadratic_from_json(detail::field(dom, "hi"), d);
    }
    return spec;
}

/// {"alphabet":[...], "horizon":N, "provenance":..., "words":[[""],["a","b"],...]}
/// with each inner list sorted in alphabet order.
inline json to_json(const FactorSet& S) {
    json words = json::array();
    for (std::size_t n = 0; n <= S.horizon(); ++n) {
        json layer = json::array();
        for (const auto& w : S.of_length(n)) layer.push_back(S.render(w));
        words.push_back(std::move(layer));
    }
    return {{"alphabet", S.alphabet().names()},
            {"horizon", S.horizon()},
            {"provenance", S.provenance()},
            {"words", std::move(words)}};
}

inline FactorSet factor_set_from_json(const json& j) {
    Alphabet alphabet(detail::string_list(detail::field(j, "alphabet"), "alphabet"));
    const auto& h = detail::field(j, "horizon");
    if (!h.is_number_unsigned()) throw parse_error("'horizon' must be a nonnegative integer");
    const auto& layers = detail::field(j, "words");
    if (!layers.is_array()) throw parse_error("'words' must be an array of arrays");
    std::unordered_set<Word> words;
    for (const auto& layer : layers)
        for (const auto& s : detail::string_list(layer, "words")) words.insert(alphabet.parse(s));
    std::string prov = j.contains("provenance") && j.at("provenance").is_string()
                           ? j.at("provenance").get<std::string>()
                           : "imported";
    return FactorSet(std::move(alphabet), h.get<std::size_t>(), std::move(words), std::move(prov));
}

inline std::vector<Word> parse_word_list(const FactorSet& S, const json& j) {
    std::vector<Word> out;
    for (const auto& s : detail::string_list(j, "code")) out.push_back(S.parse(s));
    return out;
}

inline json word_list(const FactorSet& S, const std::vector<Word>& ws) {
    json out = json::array();
    for (const auto& w : ws) out.push_back(S.render(w));
    return out;
}

inline json to_json(const Check& c) {
    json j{{"name", c.name}, {"paper_claim", c.claim}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}};
    if (c.witness) j["witness"] = *c.witness;
    if (!c.bound.empty()) j["bound"] = c.bound;
    return j;
}

/// {letters:{"b1":"ab",...}}
inline json to_json(const CodingMorphism& f) {
    json letters = json::object();
    for (std::size_t b = 0; b < f.letters.size(); ++b)
        letters[f.letters.name(static_cast<Letter>(b))] = f.target.render(f.image(static_cast<Letter>(b)));
    return {{"letters", letters}};
}

/// {target, returns:[...], cardinality, expected, pass, complete}
inline json to_json(const FactorSet& S, const ReturnReport& r, long long expected) {
    const auto& list = r.right_returns ? *r.right_returns : r.complete_returns;
    const auto card = static_cast<long long>(list.size());
    json j{{"target", word_list(S, r.target)},
           {"returns", word_list(S, list)},
           {"cardinality", card},
           {"expected", expected},
           {"pass", r.complete && card == expected},
           {"complete", r.complete}};
    if (r.right_returns) j["complete_returns"] = word_list(S, r.complete_returns);
    if (!r.complete) j["incomplete_reason"] = r.incomplete_reason;
    return j;
}

inline json to_json(const Connection& c) {
    return {{"x", to_json(c.from)},
            {"y", to_json(c.to)},
            {"n", c.length},
            {"x_decimal", c.from.decimal(30)},
            {"y_decimal", c.to.decimal(30)}};
}

inline json to_json(const ConnectionReport& r) {
    json conns = json::array();
    for (const auto& c : r.connections) conns.push_back(to_json(c));
    json comps = json::array();
    for (const auto& i : r.components)
        comps.push_back({{"lo", to_json(i.lo())}, {"hi", to_json(i.hi())},
                         {"lo_decimal", i.lo().decimal(30)}, {"hi_decimal", i.hi().decimal(30)}});
    return {{"search_bound", r.search_bound}, {"connections", conns}, {"components", comps}};
}

} // namespace neutral::io
