#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfrac/diffusion.hpp"
#include "wfrac/laplace.hpp"
#include "wfrac/params.hpp"
#include "wfrac/time_grid.hpp"

namespace wfrac::cli {

enum class Command { symbol, kernel, invert, mode, diffuse, sweep, selftest };
enum class OutputFormat { csv, json };
enum class InitialProfile { sine, parabola };

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  ///< unexpected internal error
    kExitUsage = 2,
    kExitDomain = 3,
    kExitNumerics = 4,  ///< convergence, accuracy, missing half-life crossing, failed self-test
    kExitIo = 5,
};

/// Bad command line. what() is a single line.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// --help or --version was given; what() holds the text to print before exiting with 0.
class InfoRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Command command = Command::selftest;

    std::vector<double> alphas{0.5};
    std::vector<double> betas{0.0};
    FracParams params{0.5, 0.0};  ///< first (alpha, beta); the only pair outside sweep

    GridSpec grid;
    laplace::TalbotConfig talbot;
    diffusion::MetricConfig metrics;

    std::string output_path;  ///< empty: stdout
    OutputFormat format = OutputFormat::csv;

    // invert
    std::string pair = "exp";
    std::vector<double> times;  ///< explicit --t values; empty means use the grid
    // mode
    double lambda = 1.0;
    double u0 = 1.0;
    bool experimental = false;
    // diffuse
    InitialProfile initial = InitialProfile::sine;
    int n_modes = 1;
    bool per_mode = false;

    TimeGrid make_grid() const;
};

/// Deterministic parse of argv without the program name. Every numeric field is
/// validated here. Throws UsageError or InfoRequested.
RunConfig parse_args(const std::vector<std::string>& args);

/// Runs the command, writing data to cfg.output_path (atomically) or `out`, and a
/// one-line summary to `log`. Module errors are mapped to exit codes with a
/// one-line diagnostic on `log`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& log);

/// parse_args + run with usage errors mapped to kExitUsage.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& log);

int exit_code_for(ErrorKind kind) noexcept;

/// Named transform pairs available to the invert command.
std::vector<std::string> pair_names();

/// Runs the built-in self-test suites, one PASS/FAIL line each on `log`.
/// Returns true when every suite passes.
bool run_selftest(std::ostream& log);

/// Writes `content` to `path` through a temporary file in the same directory and
/// a rename. Throws IoError.
void write_atomically(const std::string& path, const std::string& content);

/// printf "%.10g".
std::string format_number(double v);

}  // namespace wfrac::cli
