// dicke — CLI entry point.
//
//   dicke <mode> --config <path> [--out-dir <path>] [--regenerate-golden]
//
// Modes: full, envelope, analytic, validate, scan. Exit codes: 0 ok,
// 2 config error, 3 integration failure, 4 validation failure, 5 I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dicke/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw dicke::IoError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semiclassical Dicke-model bound-luminosity simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    bool regenerate_golden = false;

    for (const char* mode : {"full", "envelope", "analytic", "validate", "scan"}) {
        CLI::App* sub = app.add_subcommand(mode);
        sub->add_option("--config", config_path, "path to the key = value config file")
            ->required();
        sub->add_option("--out-dir", out_dir, "directory for emitted artifacts");
        sub->add_flag("--regenerate-golden", regenerate_golden,
                      "rewrite the golden CSVs under <out-dir>/golden");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        dicke::RunConfig cfg = dicke::parse_config(read_file(config_path));
        const std::string mode_name = app.get_subcommands().front()->get_name();
        dicke::RunMode cli_mode = cfg.mode;
        if (mode_name == "full") cli_mode = dicke::RunMode::Full;
        else if (mode_name == "envelope") cli_mode = dicke::RunMode::Envelope;
        else if (mode_name == "analytic") cli_mode = dicke::RunMode::Analytic;
        else if (mode_name == "validate") cli_mode = dicke::RunMode::Validate;
        else if (mode_name == "scan") cli_mode = dicke::RunMode::Scan;
        if (cli_mode != cfg.mode)
            throw dicke::ConfigError("config 'mode' is '" +
                                     std::string(dicke::to_string(cfg.mode)) +
                                     "' but the CLI subcommand is '" + mode_name + "'");

        const int code = dicke::run(cfg, out_dir, regenerate_golden);
        if (code == 4) std::cerr << "validation failed (see report.txt)\n";
        return code;
    } catch (const dicke::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const dicke::IntegrationError& e) {
        std::cerr << "integration failure: " << e.what() << "\n";
        return 3;
    } catch (const dicke::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
