// Batch front-end for the cavity-magnon EP3 simulator: reads a flat
// key = value config, dispatches the physics modules and writes CSV (and
// optional SVG) artifacts. Exit codes: 0 success, 1 validation error,
// 2 numerical-procedure error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "commands.hpp"
#include "config.hpp"
#include "ep3sim/errors.hpp"

namespace {

void print_error_record(const std::string& command, const std::string& kind,
                        const std::string& message) {
    std::fprintf(stderr, "{\"error\":{\"command\":\"%s\",\"kind\":\"%s\",\"message\":\"%s\"}}\n",
                 command.c_str(), kind.c_str(), message.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ep3sim: two-magnon cavity EP3 / CPA spectrum simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string figure;
    ep3sim::cli::RunOptions opt;
    if (const char* env = std::getenv("EP3SIM_OUT")) opt.out_dir = env;

    const auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* c = sub->add_option("-c,--config", config_path,
                                  "flat key = value config file");
        if (needs_config) c->required();
        sub->add_option("-o,--out", opt.out_dir,
                        "output directory (default: $EP3SIM_OUT or '.')");
        sub->add_flag("--plot", opt.plot, "also write SVG renderings of the CSVs");
    };

    add_common(app.add_subcommand("ep3", "closed-form vs numeric EP3 location"), true);
    add_common(app.add_subcommand("eigen", "eigenvalue sweep along the manifold"), true);
    add_common(app.add_subcommand("puiseux", "series coefficients and cube-root fit"), true);
    add_common(app.add_subcommand("spectrum", "output spectrum |S|^2 trace"), true);
    add_common(app.add_subcommand("dips", "spectrum trace plus dip extraction"), true);
    add_common(app.add_subcommand("enhance", "dip distance and enhancement table"), true);
    add_common(app.add_subcommand("kerr-steady", "driven Kerr steady-state sweep"), true);

    auto* rep = app.add_subcommand("reproduce", "regenerate a published figure's data");
    rep->add_option("figure", figure, "fig2, fig3 or fig4")->required();
    add_common(rep, false);

    CLI11_PARSE(app, argc, argv);

    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    try {
        using namespace ep3sim::cli;
        if (!opt.out_dir.empty() && opt.out_dir != ".") {
            std::filesystem::create_directories(opt.out_dir);
        }
        if (name == "reproduce") {
            cmd_reproduce(figure, opt);
            return 0;
        }
        const Config cfg = Config::parse_file(config_path);
        if (name == "ep3") cmd_ep3(cfg, opt);
        else if (name == "eigen") cmd_eigen(cfg, opt);
        else if (name == "puiseux") cmd_puiseux(cfg, opt);
        else if (name == "spectrum") cmd_spectrum(cfg, opt);
        else if (name == "dips") cmd_dips(cfg, opt);
        else if (name == "enhance") cmd_enhance(cfg, opt);
        else if (name == "kerr-steady") cmd_kerr_steady(cfg, opt);
        return 0;
    } catch (const ep3sim::NumericalError& e) {
        print_error_record(name, "numerical", e.what());
        return 2;
    } catch (const ep3sim::ValidationError& e) {
        print_error_record(name, "validation", e.what());
        return 1;
    } catch (const std::exception& e) {
        print_error_record(name, "validation", e.what());
        return 1;
    }
}
