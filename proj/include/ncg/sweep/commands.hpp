#pragma once

// The five sweep subcommands. Each builds a Table in config order; rows are
// evaluated concurrently unless NC_GRAPHENE_NO_PARALLEL=1 is set.

#include <iosfwd>
#include <string>
#include <vector>

#include "ncg/sweep/config.hpp"
#include "ncg/sweep/output.hpp"

namespace ncg::sweep {

enum ExitCode : int {
    exit_success = 0,
    exit_config_error = 1,
    exit_non_convergence = 2,
    exit_io_error = 3,
};

struct CommandResult {
    Table table;
    std::vector<std::string> diagnostics;  // per-row failures and summaries
    int exit_code = exit_success;
};

/// Column order of the partition/thermo record.
const std::vector<std::string>& run_record_columns();

/// Largest residual fock-check accepts before exiting with exit_non_convergence.
inline constexpr double fock_residual_limit = 1e-6;
/// Smallest tau at which thermo accepts the direct sum.
inline constexpr double direct_thermo_tau_floor = 1e-3;

CommandResult cmd_spectrum(const SweepConfig& config);
CommandResult cmd_partition(const SweepConfig& config);
CommandResult cmd_thermo(const SweepConfig& config);
CommandResult cmd_compare(const SweepConfig& config);
CommandResult cmd_fock_check(const SweepConfig& config);

CommandResult run(Command command, const SweepConfig& config);

/// Runs the command, writes its output and diagnostics, and maps every
/// failure onto an exit code.
int execute(Command command, const SweepConfig& config, std::ostream& diagnostics);

} // namespace ncg::sweep
