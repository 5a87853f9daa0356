#include "wavecons/cli/commands.hpp"
#include "wavecons/cli/scenario.hpp"

#include <wavecons/error.hpp>

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

const char* describe(wavecons::cli::Mode m) {
    using wavecons::cli::Mode;
    switch (m) {
        case Mode::identity: return "verify divergence identities off-shell";
        case Mode::simulate: return "simulate and record conserved integrals";
        case Mode::decay: return "fit the decay rate of the momentum integral";
        case Mode::map: return "check the point map to the undamped equation";
        case Mode::coeff: return "solve a coefficient transport problem on a mesh";
        case Mode::convergence: return "measure drift order under grid refinement";
    }
    return "";
}

int run_command(wavecons::cli::Mode mode, const std::string& config_path, const std::string& out_path,
                const std::optional<std::uint64_t>& seed, bool quiet) {
    using namespace wavecons::cli;
    Scenario s;
    RunOptions opts;
    opts.quiet = quiet;
    try {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot read " << config_path << '\n';
            return exit_config_error;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        s = parse_config(buf.str());
        if (s.mode != mode) {
            std::cerr << "error: config mode '" << to_string(s.mode) << "' does not match command '"
                      << command_name(mode) << "'\n";
            return exit_config_error;
        }
        if (!out_path.empty()) s.output_path = out_path;
        if (seed) s.seed = *seed;
        opts.tol_scale = tolerance_scale_from_env();
    } catch (const wavecons::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config_error;
    }
    return run_scenario(s, opts, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace wavecons::cli;
    CLI::App app{"Conservation-law checks and simulations for damped nonlinear wave equations"};
    app.require_subcommand(1);

    std::string config, out;
    std::optional<std::uint64_t> seed;
    bool quiet = false;
    std::optional<Mode> chosen;

    const Mode modes[] = {Mode::identity, Mode::simulate, Mode::decay, Mode::map, Mode::coeff, Mode::convergence};
    for (Mode m : modes) {
        auto* sub = app.add_subcommand(std::string(command_name(m)), describe(m));
        sub->add_option("--config", config, "JSON scenario file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out, "artifact path (CSV or report)");
        sub->add_option("--seed", seed, "seed for jittered draws");
        sub->add_flag("--quiet", quiet, "suppress the report on stdout");
        sub->callback([&chosen, m] { chosen = m; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_config_error;
    }
    return run_command(*chosen, config, out, seed, quiet);
}
