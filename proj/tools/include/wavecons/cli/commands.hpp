#pragma once

#include "wavecons/cli/scenario.hpp"

#include <iosfwd>

namespace wavecons::cli {

enum ExitCode { exit_pass = 0, exit_check_failed = 1, exit_config_error = 2 };

struct RunOptions {
    bool quiet = false;
    // Multiplies absolute pass/fail tolerances; read from WAVECONS_TOL by the executable.
    double tol_scale = 1.0;
};

// Runs one scenario. Artifacts go to s.output_path when set, otherwise to out; the
// key/value report goes to out unless quiet. Errors are reported on err.
int run_scenario(const Scenario& s, const RunOptions& opts, std::ostream& out, std::ostream& err);

// Reads WAVECONS_TOL; 1 when unset. A malformed value is a ValidationError.
double tolerance_scale_from_env();

}  // namespace wavecons::cli
