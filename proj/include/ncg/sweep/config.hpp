#pragma once

// Run configuration for the sweep CLI: a flat "key = value" file, presets and
// command-line overrides merged into one validated SweepConfig.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncg/core_model.hpp"
#include "ncg/partition.hpp"

namespace ncg::sweep {

/// Invalid configuration. field() names the offending key, origin() where it
/// came from ("run.cfg:3", "--tau", "preset fig1", ...).
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, std::string origin, const std::string& message);

    const std::string& field() const noexcept { return field_; }
    const std::string& origin() const noexcept { return origin_; }

private:
    std::string field_;
    std::string origin_;
};

enum class Command { Spectrum, Partition, Thermo, Compare, FockCheck };

std::string_view to_string(Command command);
std::optional<Command> parse_command(std::string_view name);

enum class Spacing { Linear, Log };

/// START[:STOP:COUNT[:log]]; a bare number is a one-point segment.
struct GridSegment {
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 1;
    Spacing spacing = Spacing::Linear;
};

/// Comma-separated list of segments, expanded in order.
using ValueList = std::vector<GridSegment>;

std::vector<double> expand(const ValueList& list);
ValueList parse_value_list(std::string_view text);  // throws std::invalid_argument

enum class OutputFormat { Csv, Json };

struct OutputSpec {
    std::string path = "-";  // "-" is stdout
    OutputFormat format = OutputFormat::Csv;
    int precision = 12;      // significant digits, 6..17
};

struct SweepConfig {
    ValueList tau_grid{GridSegment{0.1, 10.0, 200, Spacing::Linear}};
    std::vector<double> theta_bar_list{0.0};
    std::vector<double> eta_bar_list{0.0};
    std::vector<Scheme> schemes{Scheme::HurwitzZeta};
    long n_particles = 1;
    UnitMode unit_mode = UnitMode::Reduced;
    std::optional<double> si_field;  // tesla, SI mode only
    std::size_t levels = 10;         // spectrum
    std::size_t dim = 32;            // fock-check
    SumControl sum_control;
    OutputSpec output;
    std::optional<std::string> preset;

    std::vector<double> taus() const { return expand(tau_grid); }
    PhysicalScales scales() const;
};

struct RawValue {
    std::string value;
    std::string origin;
};

/// Keys (file spelling) to raw values. Later sources override earlier ones.
using RawConfig = std::map<std::string, RawValue>;

/// Keys accepted in files; flags use the same names with '-' for '_'.
const std::vector<std::string>& known_keys();

/// Parses "key = value" lines; '#' starts a comment. Unknown keys and
/// malformed lines are ConfigErrors naming source:line.
RawConfig parse_config_text(std::string_view text, std::string_view source);
RawConfig read_config_file(const std::filesystem::path& path);

/// Raw entries of a named preset: fig1 .. fig5.
RawConfig preset_entries(std::string_view name);

/// Defaults, then the preset (if either source names one), then the file,
/// then the flags. Every value is validated.
SweepConfig build_config(const RawConfig& file, const RawConfig& flags);

/// Reads the file when given, then build_config.
SweepConfig load_config(const std::optional<std::filesystem::path>& path, const RawConfig& flags);

} // namespace ncg::sweep
