// nc-graphene: parameter sweeps of the deformed-graphene Landau spectrum,
// partition function and reduced thermodynamics.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ncg/sweep/commands.hpp"
#include "ncg/sweep/config.hpp"

namespace {

struct FlagValues {
    std::optional<std::string> config;
    std::map<std::string, std::optional<std::string>> values;
};

void add_sweep_flags(CLI::App& cmd, FlagValues& flags)
{
    cmd.add_option("--config", flags.config, "Flat key = value configuration file");
    const std::pair<const char*, const char*> options[] = {
        {"--tau", "Reduced temperatures, START:STOP:COUNT[:log] or a comma list"},
        {"--theta-bar", "Spatial deformation values (comma list or grid)"},
        {"--eta-bar", "Momentum deformation values (comma list or grid)"},
        {"--scheme", "direct, hurwitz, em or all (comma list accepted)"},
        {"--particles", "Number of independent particles N"},
        {"--dim", "Fock cutoff for fock-check, 8..512"},
        {"--levels", "Number of Landau levels for spectrum"},
        {"--units", "reduced or si"},
        {"--field", "Magnetic field in tesla (si units)"},
        {"--rel-tol", "Direct-sum relative tail tolerance"},
        {"--n-cap", "Direct-sum term cap"},
        {"--format", "csv or json"},
        {"--precision", "Significant digits, 6..17"},
        {"--out", "Output path, '-' for stdout"},
        {"--preset", "fig1, fig2, fig3, fig4 or fig5"},
    };
    for (const auto& [name, help] : options) {
        std::string key = std::string(name).substr(2);
        for (char& c : key) {
            if (c == '-') {
                c = '_';
            }
        }
        cmd.add_option(name, flags.values[key], help);
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Deformed Landau levels and thermodynamics of noncommutative graphene"};
    app.require_subcommand(1);

    FlagValues flags;
    std::map<CLI::App*, ncg::sweep::Command> commands;
    const std::pair<ncg::sweep::Command, const char*> entries[] = {
        {ncg::sweep::Command::Spectrum, "Deformed Landau level table"},
        {ncg::sweep::Command::Partition, "Partition function over the sweep grid"},
        {ncg::sweep::Command::Thermo, "Reduced F, U, S, C over the sweep grid"},
        {ncg::sweep::Command::Compare, "Hurwitz vs Euler-Maclaurin vs direct-sum comparison"},
        {ncg::sweep::Command::FockCheck, "Truncated Fock-space diagonalization vs analytic levels"},
    };
    for (const auto& [command, help] : entries) {
        CLI::App* sub = app.add_subcommand(std::string(ncg::sweep::to_string(command)), help);
        add_sweep_flags(*sub, flags);
        commands[sub] = command;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ncg::sweep::exit_config_error;
    }

    ncg::sweep::Command command = ncg::sweep::Command::Spectrum;
    for (const auto& [sub, cmd] : commands) {
        if (sub->parsed()) {
            command = cmd;
        }
    }

    ncg::sweep::RawConfig raw;
    for (const auto& [key, value] : flags.values) {
        if (value) {
            std::string flag = "--" + key;
            for (char& c : flag) {
                if (c == '_') {
                    c = '-';
                }
            }
            raw[key] = {*value, flag};
        }
    }

    ncg::sweep::SweepConfig config;
    try {
        std::optional<std::filesystem::path> path;
        if (flags.config) {
            path = *flags.config;
        }
        config = ncg::sweep::load_config(path, raw);
    } catch (const ncg::sweep::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return ncg::sweep::exit_config_error;
    }

    return ncg::sweep::execute(command, config, std::cerr);
}
