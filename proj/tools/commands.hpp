#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wavefront::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kAnomaly = 2, kVerificationFailed = 3 };

/// Flag values shared by every subcommand. Defaults mirror the library.
struct RunConfig {
    double n = 2.0;
    double p = 3.0;
    double q = 2.0;
    double k = 1.0;
    std::optional<double> c;
    /// Skips the c* search when set.
    std::optional<double> cstar;
    double ctol = 1e-6;
    double rtol = 1e-10;
    double atol = 1e-12;
    double eps = 1e-4;
    std::string format = "json";
    /// Output file (directory for portrait); empty means stdout.
    std::string out;

    // portrait
    std::size_t grid = 5;
    /// xi span of the grid trajectories.
    double span = 60.0;
    // profile
    bool periodic = false;
    int loops = 6;
    int periods = 3;
    std::size_t samples = 40000;
    // cycle
    std::size_t scan_points = 64;
    std::string orbit;
    // checks
    double cmin = -2.0;
    double cmax = 4.0;
    double cstep = 0.1;
    std::size_t check_grid = 200;
};

/// Parses `args` (without the program name), runs the subcommand and
/// returns its exit code. Results go to `out` or to --out; diagnostics to
/// `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wavefront::cli
