#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "runner.hpp"

using namespace twistmod;
using namespace twistmod::cli;

namespace {

int emit(const RunOutcome& o, const std::string& format, const std::string& path) {
    const std::string text = render(o.report, format);
    if (path.empty()) {
        std::cout << text;
        return o.exit_code;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "twistmod: cannot write " << path << "\n";
        return 1;
    }
    out << text;
    return o.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized twisted modules for affine vertex operator algebras"};
    app.require_subcommand(1);

    std::string config_path, output, format;
    bool timing = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("config", config_path, "Run configuration (JSON)")->required();
        sub->add_option("--output,-o", output, "Write the report here instead of stdout");
        sub->add_option("--format,-f", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    };
    CLI::App* run = app.add_subcommand("run", "Build the twist chain, run the configured checks and report");
    add_common(run);
    run->add_flag("--timing", timing, "Include wall-clock timing (makes reports non-reproducible)");
    CLI::App* tables = app.add_subcommand("tables", "Build the twist chain and emit graded dimensions and mode tables");
    add_common(tables);

    CLI11_PARSE(app, argc, argv);

    const RunMode mode = run->parsed() ? RunMode::Run : RunMode::Tables;
    RunConfig config;
    try {
        config = load_config(config_path);
    } catch (const TwistError& e) {
        std::cerr << "twistmod: " << e.what() << "\n";
        return emit(error_outcome(e), format.empty() ? "json" : format, output);
    }
    const std::string fmt = format.empty() ? config.output_format : format;
    const std::string path = output.empty() ? config.output_path : output;
    try {
        const RunOutcome o = execute(config, mode, timing);
        if (o.report.contains("error")) std::cerr << "twistmod: " << o.report["error"]["message"].get<std::string>() << "\n";
        return emit(o, fmt, path);
    } catch (const std::exception& e) {
        std::cerr << "twistmod: internal error: " << e.what() << "\n";
        return 1;
    }
}
