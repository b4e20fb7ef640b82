#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gumbel2 {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitEstimation = 3, kExitIo = 4 };

class CliError : public std::runtime_error {
public:
    CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

/// Positive reals separated by commas and/or newlines. Blank lines and
/// '#' comments are skipped. Errors name the 1-based line.
std::vector<double> parse_values(std::string_view text);

/// Reads and parses a data file; unreadable files raise kExitIo.
std::vector<double> ingest(const std::string& path);

struct RunConfig {
    std::string command;
    std::string input;
    bool bundled_covid = false;
    int n = 0;  ///< 0: size of the data (real data) or 30 (simulate)
    int m = 0;  ///< 0: complete sample (real data) or 15 (simulate)
    double threshold = std::numeric_limits<double>::quiet_NaN();  ///< NaN: command default
    std::string scheme = "1";  ///< 1|2|3 or a run-length removal vector
    std::string removals;      ///< explicit removal vector, overrides scheme
    std::uint64_t seed = 1;
    int reps = 0;  ///< replications (simulate) or bootstrap size; 0: command default
    std::string loss = "all";
    std::vector<double> p{-0.25, 0.25};
    std::vector<double> q{-0.25, 0.25};
    std::vector<double> prior;  ///< empty: command default
    bool elicit_prior = false;  ///< moment-match priors to the complete-data fit
    std::vector<double> truth{1.5, 0.75};
    std::string methods;        ///< interval methods; empty: command default
    int chain = 5000;
    int burn_in = 1000;
    double gamma = 0.05;
    bool grid = false;
    unsigned threads = 0;
    std::string out;
};

const std::vector<std::string>& command_names();

/// Parses arguments (and an optional --config file), runs the command and
/// returns the exit code. Errors are reported on `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs a resolved configuration; throws CliError.
int dispatch(const RunConfig& cfg, std::ostream& out);

}  // namespace gumbel2
