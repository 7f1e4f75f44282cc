#pragma once

#include <iosfwd>

#include "cli/args.hpp"
#include "cli/table.hpp"

namespace jtspec::cli {

struct CommandResult {
    Table table;
    int exit_code = kExitOk;
};

/// Ground and first-excited energies per coupling: both closed forms, the
/// converged exact diagonalization and the published columns. Exit code 1
/// when any exact value misses its published counterpart by more than
/// 5e-3 or a sweep fails to converge.
CommandResult cmd_table1(const RunConfig& config);

CommandResult cmd_spectrum(const RunConfig& config);
CommandResult cmd_converge(const RunConfig& config);

/// Exit code 1 when the fitted exponent falls outside [2.7, 3.3].
CommandResult cmd_transform_residual(const RunConfig& config);

/// Exit code 1 when a pseudo-Hermiticity residual exceeds 1e-12 or the
/// spectrum is not closed under conjugation to 1e-10.
CommandResult cmd_pseudoherm(const RunConfig& config);

/// CSV header is exactly "gamma,max_imag_lowk".
CommandResult cmd_reality_scan(const RunConfig& config);

/// Dispatches on config.command. Domain errors from bad parameters
/// surface as UsageError.
CommandResult run_command(const RunConfig& config);

/// Whole invocation: parse, run, write. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jtspec::cli
