#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <openssl/evp.h>

#include "neutral/json_io.hpp"
#include "neutral/neutral.hpp"

namespace neutral::cli {

inline constexpr const char* tool_version = "0.1.0";

enum exit_code : int { ok = 0, usage = 2, data = 3, violation = 4 };

struct RunConfig {
    std::string command;
    std::string input;  ///< path, or "-" for stdin
    std::size_t horizon = 12;
    std::optional<std::size_t> classify_bound;
    std::size_t connection_bound = 64;
    std::optional<std::size_t> decode_len;
    std::vector<std::string> code;  ///< code words for bifix / returns / decode
    std::string out;                ///< empty: write to the output stream
    std::string format = "json";
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> names{"gen-morphic", "gen-iet", "analyze", "bifix",
                                                "returns",     "decode",  "verify-all"};
    return names;
}

class usage_error : public error {
public:
    using error::error;
};

using io::json;

inline std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

/// The three accepted input documents.
struct Input {
    std::string text;
    std::variant<io::MorphismInput, IETSpec, FactorSet> value;

    std::string kind() const {
        switch (value.index()) {
        case 0: return "morphism";
        case 1: return "iet";
        default: return "factor-set";
        }
    }
};

inline Input read_input(const std::string& path, std::istream& stdin_stream) {
    std::string text;
    if (path == "-" ) {
        std::ostringstream ss;
        ss << stdin_stream.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw usage_error("cannot open input file '" + path + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    auto j = io::parse_json(text);
    if (!j.is_object()) throw parse_error("input must be a JSON object");
    if (j.contains("rules")) return {text, io::parse_morphism(j)};
    if (j.contains("order1")) return {text, io::parse_iet(j)};
    if (j.contains("words")) return {text, io::factor_set_from_json(j)};
    throw parse_error("input is neither a morphism, an interval exchange nor a factor set");
}

/// Builds the language of the input at horizon N.
inline FactorSet language_of(const Input& in, std::size_t N) {
    if (auto m = std::get_if<io::MorphismInput>(&in.value)) return build_from_morphic_fixed_point(m->sigma, m->seed, N);
    if (auto s = std::get_if<IETSpec>(&in.value)) return natural_coding(make_iet(*s), N).language();
    const auto& fs = std::get<FactorSet>(in.value);
    if (fs.horizon() < N)
        throw usage_error("factor set has horizon " + std::to_string(fs.horizon()) + " < requested " +
                          std::to_string(N));
    return fs;
}

inline json report_header(const Input& in, const RunConfig& cfg) {
    return {{"tool_version", tool_version},
            {"input_digest", sha256_hex(in.text)},
            {"command", cfg.command},
            {"input_kind", in.kind()},
            {"horizon", cfg.horizon}};
}

struct CheckLog {
    json items = json::array();
    bool all_pass = true;
    std::vector<Check> plain;

    void add(const Check& c) {
        items.push_back(io::to_json(c));
        plain.push_back(c);
        all_pass = all_pass && c.pass;
    }
    void add(const std::vector<Check>& cs) {
        for (const auto& c : cs) add(c);
    }
    void add_thrown(const std::string& name, const std::string& claim, const theorem_violation& e) {
        add(Check{name, claim, "violation", "", false, e.witness(), e.what()});
    }
};

inline std::string render_text(const json& report, const CheckLog& log) {
    std::ostringstream os;
    os << "tool_version " << report.value("tool_version", "") << "\n";
    os << "input_digest " << report.value("input_digest", "") << "\n";
    for (const auto& c : log.plain) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.lhs << " vs " << c.rhs;
        if (!c.bound.empty()) os << " [" << c.bound << "]";
        if (c.witness) os << " witness " << *c.witness;
        os << "\n";
    }
    return os.str();
}

inline json classification_json(const FactorSet& S, const Classification& c) {
    json j{{"bound", c.bound},
           {"characteristic", c.characteristic},
           {"neutral", c.neutral()},
           {"neutral_up_to", c.neutral_up_to()},
           {"tree", c.tree()},
           {"tree_up_to", c.tree_up_to()}};
    if (c.neutral_witness) j["neutral_witness"] = S.render(*c.neutral_witness);
    if (c.tree_witness) j["tree_witness"] = S.render(*c.tree_witness);
    json fails = json::array();
    for (const auto& [w, why] : c.failures) fails.push_back({{"word", S.render(w)}, {"reason", why}});
    j["failures"] = fails;
    return j;
}

inline Check neutral_check(const FactorSet& S, const Classification& c) {
    return {"neutral", "m(w) = 0 for every nonempty w", "neutral up to " + std::to_string(c.neutral_up_to()),
            "neutral up to " + std::to_string(c.bound), c.neutral(),
            c.neutral_witness ? std::optional<std::string>(S.render(*c.neutral_witness)) : std::nullopt,
            "|w| <= " + std::to_string(c.bound)};
}

inline void validate(const RunConfig& cfg) {
    if (std::find(commands().begin(), commands().end(), cfg.command) == commands().end())
        throw usage_error("unknown command '" + cfg.command + "'");
    if (cfg.format != "json" && cfg.format != "text") throw usage_error("--format must be json or text");
    if (cfg.horizon < 3) throw usage_error("--horizon must be at least 3");
    if (cfg.classify_bound && *cfg.classify_bound + 2 > cfg.horizon)
        throw usage_error("--classify-bound must not exceed horizon - 2");
    if (cfg.decode_len && *cfg.decode_len < 2) throw usage_error("--decode-len must be at least 2");
    if ((cfg.command == "bifix" || cfg.command == "decode" || cfg.command == "returns") && cfg.code.empty())
        throw usage_error(cfg.command + " needs --code");
}

inline CodeSet user_code(const FactorSet& S, const RunConfig& cfg) {
    return code_kind(S, cfg.code);
}

inline json maximality_json(const FactorSet& S, const MaximalityReport& r) {
    json j{{"maximal", r.maximal}, {"reason", r.reason}};
    if (r.witness) j["witness"] = S.render(*r.witness);
    return j;
}

inline void bifix_checks(const FactorSet& S, const CodeSet& X, CheckLog& log, json* detail) {
    auto bif = is_s_maximal(S, X, CodeMode::bifix);
    if (detail) {
        (*detail)["code"] = io::word_list(S, X.words);
        (*detail)["is_prefix_code"] = X.is_prefix_code;
        (*detail)["is_suffix_code"] = X.is_suffix_code;
        (*detail)["is_bifix_code"] = X.is_bifix_code;
        (*detail)["maximal_prefix"] = maximality_json(S, is_s_maximal(S, X, CodeMode::prefix));
        (*detail)["maximal_suffix"] = maximality_json(S, is_s_maximal(S, X, CodeMode::suffix));
        (*detail)["maximal_bifix"] = maximality_json(S, bif);
    }
    if (!bif.maximal) throw data_error("code is not an S-maximal bifix code: " + bif.reason);
    auto deg = s_degree(S, X);
    if (detail) {
        (*detail)["degree"] = deg.degree;
        (*detail)["degree_witness"] = S.render(deg.witness);
    }
    log.add(Check{"internal-factor-characterisation", "d_X(w) < d_X(S) iff w is an internal factor of X",
                  std::to_string(deg.degree), std::to_string(deg.degree), deg.internal_factor_check,
                  deg.internal_factor_witness ? std::optional<std::string>(S.render(*deg.internal_factor_witness))
                                              : std::nullopt,
                  "|w| <= " + std::to_string(deg.scan_bound)});
    try {
        auto classes = prefix_partition(S, X);
        const bool count_ok = classes.size() + 1 == deg.degree;
        log.add(Check{"prefix-partition", "nonempty proper prefixes = disjoint union of n-1 S-maximal suffix codes",
                      std::to_string(classes.size()) + " classes", std::to_string(deg.degree - 1) + " classes",
                      count_ok, std::nullopt, "degree " + std::to_string(deg.degree)});
        json cls = json::array();
        for (const auto& y : classes) {
            cls.push_back(io::word_list(S, y.words));
            log.add(rho_sum_report(S, y.words).laws);
        }
        if (detail) (*detail)["prefix_classes"] = cls;
    } catch (const theorem_violation& e) {
        log.add_thrown("prefix-partition", "nonempty proper prefixes = disjoint union of n-1 S-maximal suffix codes", e);
    }
    log.add(rho_sum_report(S, proper_prefixes(X)).laws);
    log.add(verify_cardinality(S, X));
}

inline void decoding_checks(const FactorSet& S, const CodeSet& X, std::size_t M, CheckLog& log, json* detail) {
    auto rep = verify_decoding_neutral(S, X, M);
    log.add(rep.checks);
    if (detail) {
        (*detail)["morphism"] = io::to_json(rep.morphism);
        (*detail)["decoded"] = io::to_json(rep.decoded);
        (*detail)["classification"] = classification_json(rep.decoded, rep.classification);
        auto rec = recurrence_report(rep.decoded, rep.decoded.horizon());
        json r{{"bound", rec.bound}, {"recurrent", rec.recurrent}};
        if (rec.failing_pair)
            r["failing_pair"] = {rep.decoded.render(rec.failing_pair->first),
                                 rep.decoded.render(rec.failing_pair->second)};
        (*detail)["recurrence"] = r;
    }
}

inline std::size_t decode_length(const FactorSet& S, const CodeSet& X, const RunConfig& cfg) {
    const std::size_t M = cfg.decode_len.value_or(default_decode_length(S, X));
    if (M * X.max_len > S.horizon())
        throw usage_error("--decode-len " + std::to_string(M) + " needs horizon >= " +
                          std::to_string(M * X.max_len));
    return M;
}

inline json run_verify_all(const Input& in, const FactorSet& S, const RunConfig& cfg, CheckLog& log) {
    const auto N = S.horizon();
    const std::size_t L = cfg.classify_bound.value_or(N - 2);
    json skipped = json::array();
    auto skip = [&](const std::string& check, const std::string& reason) {
        skipped.push_back({{"check", check}, {"reason", reason}});
    };

    auto cls = classify(S, L);
    log.add(neutral_check(S, cls));
    log.add(complexity_profile(S).checks);

    if (!cls.neutral()) {
        skip("bifix-and-return-laws", "set is not neutral up to length " + std::to_string(L));
    } else {
        log.add(rho_telescoping(S, N - 3));
        log.add(rho_sum_report(S, uniform_code(S, 1).words).laws);
        for (std::size_t n = 1; 2 * n <= N; ++n) bifix_checks(S, uniform_code(S, n), log, nullptr);
        if (!cfg.code.empty()) bifix_checks(S, user_code(S, cfg), log, nullptr);

        for (std::size_t n = 1; n + 2 <= N; ++n) {
            auto X = uniform_code(S, n);
            log.add(verify_return_cardinality(S, X));
            auto cr = complete_return_words(S, X);
            log.add(Check{"uniform-returns", "CR_S(S ∩ A^n) = S ∩ A^(n+1)",
                          std::to_string(cr.complete_returns.size()), std::to_string(S.count(n + 1)),
                          cr.complete_returns == S.of_length(n + 1), std::nullopt, "n = " + std::to_string(n)});
        }
        for (std::size_t n = 1; n <= 2 && n + 2 <= N; ++n) {
            for (const auto& x : S.of_length(n)) {
                auto X = code_kind(std::vector<Word>{x});
                auto cr = complete_return_words(S, X);
                if (!cr.complete) {
                    skipped.push_back({{"check", "return-cardinality"}, {"target", S.render(x)},
                                       {"reason", cr.incomplete_reason}});
                    continue;
                }
                log.add(verify_return_cardinality(S, X));
            }
        }

        if (N >= 4) decoding_checks(S, uniform_code(S, 2), std::min(cfg.decode_len.value_or(N / 2), N / 2), log, nullptr);
        if (!cfg.code.empty()) {
            auto X = user_code(S, cfg);
            decoding_checks(S, X, decode_length(S, X, cfg), log, nullptr);
        }
    }

    if (auto spec = std::get_if<IETSpec>(&in.value)) {
        auto T = make_iet(*spec);
        if (find_connections(T, cfg.connection_bound).only_length_zero())
            log.add(verify_iet_neutral(T, N, cfg.connection_bound).checks);
        else
            skip("iet-neutral", "connection of length >= 1 found");
    }
    return skipped;
}

/// Executes one command. Returns the process exit status; the report goes to
/// `out` (or to cfg.out), diagnostics to `err`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err, std::istream& in_stream = std::cin) {
    try {
        validate(cfg);
        const Input in = read_input(cfg.input, in_stream);
        json report = report_header(in, cfg);
        CheckLog log;
        bool check_report = true;
        json payload;

        if (cfg.command == "gen-morphic" || cfg.command == "gen-iet") {
            if (cfg.command == "gen-morphic" && in.value.index() != 0)
                throw usage_error("gen-morphic expects a morphism description");
            if (cfg.command == "gen-iet" && in.value.index() != 1)
                throw usage_error("gen-iet expects an interval exchange description");
            payload = io::to_json(language_of(in, cfg.horizon));
            check_report = false;
        } else {
            const FactorSet S = language_of(in, cfg.horizon);
            const auto N = S.horizon();
            if (cfg.command == "analyze") {
                const std::size_t L = cfg.classify_bound.value_or(N - 2);
                auto cls = classify(S, L);
                auto prof = complexity_profile(S);
                report["characteristic"] = cls.characteristic;
                report["classification"] = classification_json(S, cls);
                report["profile"] = {{"p", prof.profile.p}, {"s", prof.profile.s}, {"b", prof.profile.b}};
                auto e0 = extension_graph(S, Word{});
                report["empty_word_graph"] = {{"vertices", e0.vertex_count()}, {"edges", e0.stats.e()},
                                              {"components", e0.components.size()}, {"acyclic", e0.acyclic},
                                              {"multiplicity", e0.stats.m()}};
                auto rec = recurrence_report(S, std::min<std::size_t>(N, 8));
                json r{{"bound", rec.bound}, {"recurrent", rec.recurrent}};
                if (rec.failing_pair)
                    r["failing_pair"] = {S.render(rec.failing_pair->first), S.render(rec.failing_pair->second)};
                if (rec.uniform_radius) r["uniform_radius"] = *rec.uniform_radius;
                report["recurrence"] = r;
                log.add(prof.checks);
                if (cls.neutral()) log.add(rho_telescoping(S, N - 3));
            } else if (cfg.command == "bifix") {
                json detail;
                bifix_checks(S, user_code(S, cfg), log, &detail);
                report["bifix"] = detail;
            } else if (cfg.command == "returns") {
                auto X = user_code(S, cfg);
                const long long k = static_cast<long long>(S.alphabet().size());
                const long long chi = characteristic(S);
                ReturnReport rr = X.size() == 1 ? right_return_words(S, X.words.front()) : complete_return_words(S, X);
                const long long expected =
                    X.size() == 1 ? k - chi + 1 : static_cast<long long>(X.size()) + k - chi;
                report["returns"] = io::to_json(S, rr, expected);
                if (rr.complete) log.add(verify_return_cardinality(S, X));
            } else if (cfg.command == "decode") {
                auto X = user_code(S, cfg);
                json detail;
                decoding_checks(S, X, decode_length(S, X, cfg), log, &detail);
                report["decode"] = detail;
            } else if (cfg.command == "verify-all") {
                report["skipped"] = run_verify_all(in, S, cfg, log);
            }
        }

        std::string rendered;
        if (check_report) {
            report["checks"] = log.items;
            report["pass"] = log.all_pass;
            rendered = cfg.format == "json" ? report.dump(2) + "\n" : render_text(report, log);
        } else if (cfg.format == "json") {
            rendered = payload.dump(2) + "\n";
        } else {
            std::ostringstream os;
            for (const auto& layer : payload["words"]) {
                for (const auto& w : layer) os << (w.get<std::string>().empty() ? "ε" : w.get<std::string>()) << ' ';
                os << '\n';
            }
            rendered = os.str();
        }
        if (cfg.out.empty()) {
            out << rendered;
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!f) throw usage_error("cannot write '" + cfg.out + "'");
            f << rendered;
        }
        if (!log.all_pass) {
            err << "one or more checks failed\n";
            return violation;
        }
        return ok;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return usage;
    } catch (const theorem_violation& e) {
        err << "theorem violation: " << e.what();
        if (e.witness()) err << " (witness " << *e.witness() << ")";
        err << "\n";
        return violation;
    } catch (const error& e) {
        err << "data error: " << e.what() << "\n";
        return data;
    }
}

} // namespace neutral::cli
