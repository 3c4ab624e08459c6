#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsde/models.hpp"

namespace fsde::cli {

enum class Command { paths, solve, fuzzy_solve, envelope, converge, alpha_sweep };
enum class Format { csv, json };

std::string_view to_string(Command c) noexcept;

/// Process exit codes; each failure class gets its own.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int usage = 2;        // unknown flag, malformed command line
inline constexpr int invalid_value = 3; // bad number, TFN ordering, out-of-range parameter
inline constexpr int divisibility = 4;  // R or dt does not tile the horizon
inline constexpr int output = 5;        // output file cannot be written
} // namespace exit_code

struct RunConfig {
    Command command = Command::solve;
    ModelKind model = ModelKind::gbm;
    TriangularFuzzyNumber mu = TriangularFuzzyNumber::crisp(0.0);
    TriangularFuzzyNumber sigma = TriangularFuzzyNumber::crisp(0.0);
    TriangularFuzzyNumber x0 = TriangularFuzzyNumber::crisp(1.0);
    double t0 = 0.0;
    double T = 1.0;
    double dt = 0x1.0p-8;
    std::vector<std::size_t> Rs{1};
    double alpha = 0.0;
    std::vector<double> alphas;
    std::uint64_t seed = 42;
    std::size_t seeds = 1;
    std::string out;
    std::optional<std::string> exact_out;
    Format format = Format::csv;

    /// Number of fine steps covering [t0, T].
    std::size_t fine_steps() const;
};

/// "a" gives the crisp (a, a, a); "l,m,r" is validated for ordering.
/// `flag` names the option in error messages.
TriangularFuzzyNumber parse_tfn(std::string_view text, std::string_view flag = "tfn");

/// Builds and validates a configuration from option values keyed by long
/// flag name without dashes ("mu", "dt-exp", ...). Unset keys take the
/// defaults of the chosen model (gbm: mu 0.65,0.75,0.85 sigma 0.25,0.30,0.35;
/// langevin: mu 8,10,12 sigma 0.5,1,1.5; x0 = 1).
RunConfig make_config(Command command, const std::map<std::string, std::string>& values);

/// Executes the command: writes data file(s), prints one summary line to
/// `out`, diagnostics to `err`. Returns an exit_code value.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fsde::cli
