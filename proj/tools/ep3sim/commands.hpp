#pragma once

// One function per CLI subcommand. Each parses its inputs from the run
// Config, writes CSV (and optional SVG) artifacts into `out_dir` and prints
// a short summary to stdout. Figure recipes are also used directly by the
// golden-output tests, so they must stay deterministic.

#include <string>

#include "config.hpp"

namespace ep3sim::cli {

struct RunOptions {
    std::string out_dir = ".";
    bool plot = false;
};

void cmd_ep3(const Config& cfg, const RunOptions& opt);
void cmd_eigen(const Config& cfg, const RunOptions& opt);
void cmd_puiseux(const Config& cfg, const RunOptions& opt);
void cmd_spectrum(const Config& cfg, const RunOptions& opt);
void cmd_dips(const Config& cfg, const RunOptions& opt);
void cmd_enhance(const Config& cfg, const RunOptions& opt);
void cmd_kerr_steady(const Config& cfg, const RunOptions& opt);
void cmd_reproduce(const std::string& figure, const RunOptions& opt);

// CSV payloads behind `reproduce`, exposed for the determinism tests.
std::string fig2_csv(double eta);
std::string fig3_csv(double delta_k);
std::string fig4_csv();

}  // namespace ep3sim::cli
