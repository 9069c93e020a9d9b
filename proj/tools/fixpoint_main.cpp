#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fixpoint/commands.hpp"
#include "fixpoint/errors.hpp"

namespace {

std::string read_config_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw fixpoint::ConfigError("config: cannot open '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

struct SubcommandArgs {
    std::string config_path = "-";
    std::string out_dir;
    bool out_set = false;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed-point iteration toolkit"};
    app.require_subcommand(1);

    const std::pair<fixpoint::Command, const char*> commands[] = {
        {fixpoint::Command::compare, "run a multi-scheme convergence comparison"},
        {fixpoint::Command::stability, "run a perturbed-iteration stability experiment"},
        {fixpoint::Command::dde, "solve a delay differential equation"},
        {fixpoint::Command::bounds, "tabulate the theoretical error bounds"},
        {fixpoint::Command::certify, "estimate a weak-contraction certificate"},
    };

    SubcommandArgs args[std::size(commands)];
    CLI::App* subs[std::size(commands)];
    for (std::size_t i = 0; i < std::size(commands); ++i) {
        auto* sub = app.add_subcommand(std::string(command_name(commands[i].first)),
                                       commands[i].second);
        sub->add_option("--config", args[i].config_path,
                        "path to the JSON config, or '-' for stdin");
        sub->add_option("--out", args[i].out_dir, "output directory (overrides output_dir)")
            ->each([&args, i](const std::string&) { args[i].out_set = true; });
        sub->add_option("--seed", args[i].seed, "sampler seed (overrides seed)")
            ->each([&args, i](const std::string&) { args[i].seed_set = true; });
        subs[i] = sub;
    }

    CLI11_PARSE(app, argc, argv);

    for (std::size_t i = 0; i < std::size(commands); ++i) {
        if (!subs[i]->parsed()) continue;
        try {
            const std::string text = read_config_text(args[i].config_path);
            fixpoint::RunConfig cfg = fixpoint::parse_config(text, commands[i].first);
            if (args[i].out_set) cfg.output_dir = args[i].out_dir;
            if (args[i].seed_set) {
                cfg.seed = args[i].seed;
                cfg.perturbation.seed = args[i].seed;
            }
            return fixpoint::run_command_catching(cfg, std::cout, std::cerr);
        } catch (const fixpoint::ConfigError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return fixpoint::exit_config_error;
        }
    }
    return fixpoint::exit_config_error;
}
