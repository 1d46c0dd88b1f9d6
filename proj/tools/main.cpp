#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
    neutral::cli::RunConfig cfg;
    std::size_t classify_bound = 0, decode_len = 0;
    std::string word;

    CLI::App app{"Finite truncations of neutral sets: generators, analyses and verifiers"};
    app.set_version_flag("--version", neutral::cli::tool_version);
    app.add_option("command", cfg.command, "gen-morphic | gen-iet | analyze | bifix | returns | decode | verify-all")
        ->required()
        ->check(CLI::IsMember(neutral::cli::commands()));
    app.add_option("input", cfg.input, "JSON input file, or - for stdin")->required();
    app.add_option("--horizon,-N", cfg.horizon, "truncation horizon N")->capture_default_str();
    auto* cb = app.add_option("--classify-bound", classify_bound, "largest word length classified (<= N-2)");
    app.add_option("--connection-bound", cfg.connection_bound, "IET connection search bound K")
        ->capture_default_str();
    auto* dl = app.add_option("--decode-len", decode_len, "length bound M of decoded words");
    app.add_option("--code", cfg.code, "code words, comma separated")->delimiter(',');
    auto* wo = app.add_option("--word", word, "single target word for returns");
    app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--out,-o", cfg.out, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return neutral::cli::usage;
    }
    if (*cb) cfg.classify_bound = classify_bound;
    if (*dl) cfg.decode_len = decode_len;
    if (*wo) cfg.code.push_back(word);
    return neutral::cli::run(cfg, std::cout, std::cerr);
}
