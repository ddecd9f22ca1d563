#include "ncg/sweep/commands.hpp"

#include <cmath>
#include <exception>
#include <ostream>

#include "ncg/error.hpp"
#include "ncg/fock_oracle.hpp"
#include "ncg/parallel.hpp"
#include "ncg/partition.hpp"
#include "ncg/thermo.hpp"

namespace ncg::sweep {

namespace {

struct GridPoint {
    NCParams params;
    Scheme scheme;
    double tau;
};

// Rows ordered by (theta_bar, eta_bar, scheme, tau) in config-list order.
std::vector<GridPoint> run_grid(const SweepConfig& config)
{
    const std::vector<double> taus = config.taus();
    std::vector<GridPoint> grid;
    for (double theta : config.theta_bar_list) {
        for (double eta : config.eta_bar_list) {
            for (Scheme scheme : config.schemes) {
                for (double tau : taus) {
                    grid.push_back({{theta, eta}, scheme, tau});
                }
            }
        }
    }
    return grid;
}

std::vector<NCParams> param_sets(const SweepConfig& config)
{
    std::vector<NCParams> sets;
    for (double theta : config.theta_bar_list) {
        for (double eta : config.eta_bar_list) {
            sets.push_back({theta, eta});
        }
    }
    return sets;
}

std::string label(const NCParams& p)
{
    return "theta_bar=" + format_number(p.theta_bar, 6) + " eta_bar=" + format_number(p.eta_bar, 6);
}

CommandResult run_records(const SweepConfig& config, bool with_thermo)
{
    const std::vector<GridPoint> grid = run_grid(config);
    std::vector<std::vector<Cell>> rows(grid.size());
    std::vector<std::string> errors(grid.size());

    for_each_index(grid.size(), Execution::Auto, [&](std::size_t i) {
        const GridPoint& g = grid[i];
        std::vector<Cell> row = {
            g.tau, g.params.theta_bar, g.params.eta_bar, std::string(to_string(g.scheme)),
            static_cast<std::int64_t>(config.n_particles),
        };
        try {
            const PartitionEvaluation eval =
                evaluate(g.scheme, g.tau, g.params, config.sum_control, Execution::Serial);
            row.push_back(eval.z_value);
            if (with_thermo) {
                const ThermoPoint p = thermo_point(eval, config.n_particles);
                row.insert(row.end(), {p.f_bar, p.u_bar, p.s_bar, p.c_bar});
            } else {
                row.insert(row.end(), 4, std::monostate{});
            }
            row.push_back(eval.tail_bound ? Cell{*eval.tail_bound} : Cell{});
            row.push_back(eval.converged);
            if (!eval.converged) {
                errors[i] = "level sum hit n_cap";
            }
        } catch (const std::exception& e) {
            row.resize(5);
            row.insert(row.end(), 6, std::monostate{});
            row.push_back(false);
            errors[i] = e.what();
        }
        rows[i] = std::move(row);
    });

    CommandResult result;
    result.table.columns = run_record_columns();
    result.table.rows = std::move(rows);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!errors[i].empty()) {
            result.diagnostics.push_back("row " + std::to_string(i) + " (" + label(grid[i].params) +
                                         " scheme=" + std::string(to_string(grid[i].scheme)) +
                                         " tau=" + format_number(grid[i].tau, 6) + "): " + errors[i]);
            result.exit_code = exit_non_convergence;
        }
    }
    return result;
}

} // namespace

const std::vector<std::string>& run_record_columns()
{
    static const std::vector<std::string> columns = {
        "tau",   "theta_bar", "eta_bar", "scheme", "n_particles", "z",
        "f_bar", "u_bar",     "s_bar",   "c_bar",  "tail_bound",  "converged",
    };
    return columns;
}

CommandResult cmd_spectrum(const SweepConfig& config)
{
    const PhysicalScales scales = config.scales();
    CommandResult result;
    result.table.columns = {"theta_bar", "eta_bar", "n", "band", "energy_reduced", "energy"};
    for (const NCParams& p : param_sets(config)) {
        for (Band band : {Band::Conduction, Band::Valence}) {
            for (std::size_t n = 0; n < config.levels; ++n) {
                const LandauLevel level = landau_level(static_cast<std::int64_t>(n), band, p, scales);
                result.table.rows.push_back({p.theta_bar, p.eta_bar, static_cast<std::int64_t>(n),
                                             static_cast<std::int64_t>(static_cast<int>(band)),
                                             level.energy_reduced, level.energy});
            }
        }
    }
    return result;
}

CommandResult cmd_partition(const SweepConfig& config)
{
    return run_records(config, false);
}

CommandResult cmd_thermo(const SweepConfig& config)
{
    for (Scheme s : config.schemes) {
        if (s != Scheme::DirectSum) {
            continue;
        }
        for (double tau : config.taus()) {
            if (tau < direct_thermo_tau_floor) {
                throw ConfigError("tau", "thermo",
                                  "the direct sum is not evaluated below tau = 1e-3 (got " +
                                      format_number(tau, 6) + ")");
            }
        }
    }
    return run_records(config, true);
}

CommandResult cmd_compare(const SweepConfig& config)
{
    struct Point {
        NCParams params;
        double tau;
    };
    std::vector<Point> grid;
    const std::vector<double> taus = config.taus();
    for (const NCParams& p : param_sets(config)) {
        for (double tau : taus) {
            grid.push_back({p, tau});
        }
    }

    std::vector<std::vector<Cell>> rows(grid.size());
    std::vector<std::string> errors(grid.size());
    for_each_index(grid.size(), Execution::Auto, [&](std::size_t i) {
        const Point& g = grid[i];
        std::vector<Cell> row = {g.params.theta_bar, g.params.eta_bar, g.tau};
        try {
            const double zh = z_hurwitz(g.tau, g.params).z_value;
            const double zem = z_euler_maclaurin(g.tau, g.params).z_value;
            const PartitionEvaluation direct =
                z_direct(g.tau, g.params, config.sum_control, Execution::Serial);
            row.insert(row.end(), {zh, zem, direct.z_value, (zem - zh) / zem,
                                   (zem - direct.z_value) / direct.z_value});
            row.push_back(direct.converged);
            if (!direct.converged) {
                errors[i] = "level sum hit n_cap";
            }
        } catch (const std::exception& e) {
            row.insert(row.end(), 5, std::monostate{});
            row.push_back(false);
            errors[i] = e.what();
        }
        rows[i] = std::move(row);
    });

    CommandResult result;
    result.table.columns = {"theta_bar",  "eta_bar",  "tau", "z_hurwitz", "z_em", "z_direct",
                            "rel_err_em_vs_hurwitz", "rel_err_em_vs_direct", "direct_converged"};
    result.table.rows = std::move(rows);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!errors[i].empty()) {
            result.diagnostics.push_back("row " + std::to_string(i) + " (" + label(grid[i].params) +
                                         " tau=" + format_number(grid[i].tau, 6) + "): " + errors[i]);
            result.exit_code = exit_non_convergence;
        }
    }
    return result;
}

CommandResult cmd_fock_check(const SweepConfig& config)
{
    if (config.dim < 8 || config.dim > 512) {
        throw ConfigError("dim", "fock-check",
                          "Fock cutoff must lie in [8, 512], got " + std::to_string(config.dim));
    }
    const PhysicalScales scales = config.scales();
    CommandResult result;
    result.table.columns = {"theta_bar", "eta_bar", "index", "n", "analytic", "numeric",
                            "rel_dev",   "trusted"};

    for (const NCParams& p : param_sets(config)) {
        SpectrumReport report;
        try {
            report = spectrum_report(p, scales, config.dim);
        } catch (const ConvergenceError& e) {
            result.diagnostics.push_back(label(p) + ": " + e.what() +
                                         " (residual " + format_number(e.residual(), 6) + ")");
            result.exit_code = exit_non_convergence;
            continue;
        }
        for (std::size_t i = 0; i < report.eigenvalues.size(); ++i) {
            const double exact = report.analytic[i];
            const double numeric = report.eigenvalues[i];
            const double dev = report.level[i] == 0 ? std::abs(numeric) / report.coupling
                                                    : std::abs(numeric - exact) / std::abs(exact);
            result.table.rows.push_back({p.theta_bar, p.eta_bar, static_cast<std::int64_t>(i),
                                         static_cast<std::int64_t>(report.level[i]), exact, numeric,
                                         dev, static_cast<bool>(report.trusted[i])});
        }
        result.diagnostics.push_back(
            label(p) + " dim=" + std::to_string(report.dim) +
            " interior_residual=" + format_number(report.interior_residual, 6) +
            " zero_modes=" + std::to_string(report.zero_modes) +
            " commutator_defect[" + std::to_string(report.defect_index) +
            "]=" + format_number(report.defect_value, 6));
        if (!(report.interior_residual <= fock_residual_limit)) {
            result.exit_code = exit_non_convergence;
        }
    }
    return result;
}

CommandResult run(Command command, const SweepConfig& config)
{
    switch (command) {
    case Command::Spectrum:
        return cmd_spectrum(config);
    case Command::Partition:
        return cmd_partition(config);
    case Command::Thermo:
        return cmd_thermo(config);
    case Command::Compare:
        return cmd_compare(config);
    case Command::FockCheck:
        return cmd_fock_check(config);
    }
    throw ConfigError("command", "cli", "unknown command");
}

int execute(Command command, const SweepConfig& config, std::ostream& diagnostics)
{
    try {
        const CommandResult result = run(command, config);
        write_output(render(result.table, config.output, to_string(command)), config.output);
        for (const std::string& line : result.diagnostics) {
            diagnostics << to_string(command) << ": " << line << '\n';
        }
        return result.exit_code;
    } catch (const ConfigError& e) {
        diagnostics << "config error: " << e.what() << '\n';
        return exit_config_error;
    } catch (const IoError& e) {
        diagnostics << "i/o error: " << e.what() << '\n';
        return exit_io_error;
    } catch (const DomainError& e) {
        diagnostics << "config error: " << e.what() << '\n';
        return exit_config_error;
    } catch (const std::exception& e) {
        diagnostics << "error: " << e.what() << '\n';
        return exit_non_convergence;
    }
}

} // namespace ncg::sweep
