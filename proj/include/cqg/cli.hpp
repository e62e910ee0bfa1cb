#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cqg/rep_data.hpp"

namespace cqg::cli {

enum ExitCode { pass = 0, finding = 1, usage = 2 };

/// Runs the command line `args` (args[0] is the program name). The report goes
/// to `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ModelOptions {
    std::string model = "su_q_2";
    double q = 0.5;
    int max_level = 4;
    std::vector<double> f_diag{1, 1, 2};
    Tolerance tol;
};

/// Resolves --model: "builtin:<name>", a bare built-in name, or a JSON path.
QGModel resolve_model(const ModelOptions& o);

}  // namespace cqg::cli
