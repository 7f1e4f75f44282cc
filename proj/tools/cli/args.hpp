#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cli/table.hpp"
#include "jtspec/basis.hpp"
#include "jtspec/models.hpp"

namespace jtspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitThreshold = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Command { Table1, Spectrum, Converge, TransformResidual, Pseudoherm, RealityScan };

std::string_view to_string(Command command);

/// Fully resolved invocation: per-command defaults are already applied.
struct RunConfig {
    Command command = Command::Table1;
    ModelParams params;
    BasisSpec basis = BasisSpec::total_number(10);
    std::optional<std::string> output_path;
    OutputFormat format = OutputFormat::Csv;

    double tol = 1e-8;
    int k_low = 4;
    std::vector<double> grid;
    ModelKind model = ModelKind::FullJT;

    /// table1: restrict to one coupling instead of the published rows.
    std::optional<double> kappa2_override;
    /// table1/converge: largest TotalNumber cutoff of the schedule.
    int schedule_max = 40;
};

/// "a:b:step" (inclusive of b up to rounding) or a comma-separated list.
/// Throws UsageError on malformed input or an empty result.
std::vector<double> parse_grid(std::string_view text);

/// Default configuration for a command, before any flag is applied.
RunConfig default_config(Command command);

struct ParseResult {
    std::optional<RunConfig> config;  // empty when the parser already handled the call (--help)
    int exit_code = kExitOk;
};

/// Parses argv; usage errors are reported on `err` with exit code 2.
ParseResult parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jtspec::cli
