#include "ncg/sweep/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ncg/error.hpp"

namespace ncg::sweep {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    while (true) {
        const auto pos = s.find(sep, begin);
        parts.push_back(trim(s.substr(begin, pos - begin)));
        if (pos == std::string_view::npos) {
            break;
        }
        begin = pos + 1;
    }
    return parts;
}

double parse_double(std::string_view text)
{
    const std::string buffer(text);
    if (buffer.empty()) {
        throw std::invalid_argument("empty number");
    }
    char* end = nullptr;
    errno = 0;
    const double value = std::strtod(buffer.c_str(), &end);
    if (end != buffer.c_str() + buffer.size() || errno == ERANGE) {
        throw std::invalid_argument("'" + buffer + "' is not a number");
    }
    return value;
}

long long parse_integer(std::string_view text)
{
    const std::string buffer(text);
    if (buffer.empty()) {
        throw std::invalid_argument("empty integer");
    }
    char* end = nullptr;
    errno = 0;
    const long long value = std::strtoll(buffer.c_str(), &end, 10);
    if (end != buffer.c_str() + buffer.size() || errno == ERANGE) {
        throw std::invalid_argument("'" + buffer + "' is not an integer");
    }
    return value;
}

// Parses from_raw[key] when present, reporting failures against its origin.
class Reader {
public:
    explicit Reader(const RawConfig& raw) : raw_(raw) {}

    template <typename Fn>
    void with(const std::string& key, Fn&& fn) const
    {
        const auto it = raw_.find(key);
        if (it == raw_.end()) {
            return;
        }
        try {
            fn(it->second.value);
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError(key, it->second.origin, e.what());
        }
    }

private:
    const RawConfig& raw_;
};

std::vector<double> parse_parameter_list(std::string_view text)
{
    std::vector<double> values = expand(parse_value_list(text));
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument("deformation parameters must be finite and non-negative");
        }
    }
    return values;
}

} // namespace

ConfigError::ConfigError(std::string field, std::string origin, const std::string& message)
    : std::runtime_error(origin + ": " + field + ": " + message),
      field_(std::move(field)),
      origin_(std::move(origin))
{
}

std::string_view to_string(Command command)
{
    switch (command) {
    case Command::Spectrum:
        return "spectrum";
    case Command::Partition:
        return "partition";
    case Command::Thermo:
        return "thermo";
    case Command::Compare:
        return "compare";
    case Command::FockCheck:
        return "fock-check";
    }
    return "unknown";
}

std::optional<Command> parse_command(std::string_view name)
{
    for (Command c : {Command::Spectrum, Command::Partition, Command::Thermo, Command::Compare,
                      Command::FockCheck}) {
        if (to_string(c) == name) {
            return c;
        }
    }
    return std::nullopt;
}

std::vector<double> expand(const ValueList& list)
{
    std::vector<double> values;
    for (const GridSegment& seg : list) {
        if (seg.count == 1) {
            values.push_back(seg.start);
            continue;
        }
        const double steps = static_cast<double>(seg.count - 1);
        for (std::size_t i = 0; i < seg.count; ++i) {
            const double t = static_cast<double>(i) / steps;
            double v;
            if (i + 1 == seg.count) {
                v = seg.stop;
            } else if (seg.spacing == Spacing::Log) {
                v = seg.start * std::pow(seg.stop / seg.start, t);
            } else {
                v = seg.start + (seg.stop - seg.start) * t;
            }
            values.push_back(v);
        }
    }
    return values;
}

ValueList parse_value_list(std::string_view text)
{
    ValueList list;
    for (std::string_view item : split(text, ',')) {
        if (item.empty()) {
            throw std::invalid_argument("empty list item in '" + std::string(text) + "'");
        }
        const auto fields = split(item, ':');
        GridSegment seg;
        if (fields.size() == 1) {
            seg.start = seg.stop = parse_double(fields[0]);
        } else if (fields.size() == 3 || fields.size() == 4) {
            seg.start = parse_double(fields[0]);
            seg.stop = parse_double(fields[1]);
            const long long count = parse_integer(fields[2]);
            if (count < 1) {
                throw std::invalid_argument("grid count must be at least 1");
            }
            seg.count = static_cast<std::size_t>(count);
            if (fields.size() == 4) {
                if (fields[3] == "log") {
                    seg.spacing = Spacing::Log;
                } else if (fields[3] == "linear" || fields[3] == "lin") {
                    seg.spacing = Spacing::Linear;
                } else {
                    throw std::invalid_argument("unknown spacing '" + std::string(fields[3]) + "'");
                }
            }
            if (seg.spacing == Spacing::Log && !(seg.start > 0.0 && seg.stop > 0.0)) {
                throw std::invalid_argument("log grids need positive end points");
            }
        } else {
            throw std::invalid_argument("malformed grid '" + std::string(item) +
                                        "', expected START:STOP:COUNT[:log]");
        }
        if (!std::isfinite(seg.start) || !std::isfinite(seg.stop)) {
            throw std::invalid_argument("grid end points must be finite");
        }
        list.push_back(seg);
    }
    return list;
}

PhysicalScales SweepConfig::scales() const
{
    if (unit_mode == UnitMode::SI) {
        return PhysicalScales::si_for_field(si_field.value_or(1.0));
    }
    return PhysicalScales::reduced();
}

const std::vector<std::string>& known_keys()
{
    static const std::vector<std::string> keys = {
        "tau", "theta_bar", "eta_bar", "scheme", "particles", "units", "field", "levels",
        "dim", "rel_tol", "n_cap", "format", "precision", "out", "preset",
    };
    return keys;
}

RawConfig parse_config_text(std::string_view text, std::string_view source)
{
    RawConfig raw;
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const auto end = text.find('\n', begin);
        std::string_view line = text.substr(begin, end == std::string_view::npos ? text.npos : end - begin);
        begin = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::string origin = std::string(source) + ":" + std::to_string(line_no);
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(std::string(line), origin, "expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        const auto& keys = known_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw ConfigError(key, origin, "unknown key");
        }
        if (value.empty()) {
            throw ConfigError(key, origin, "missing value");
        }
        raw[key] = {value, origin};
    }
    return raw;
}

RawConfig read_config_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config", path.string(), "cannot open file");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str(), path.string());
}

RawConfig preset_entries(std::string_view name)
{
    const std::string origin = "preset " + std::string(name);
    auto make = [&](std::initializer_list<std::pair<const char*, const char*>> entries) {
        RawConfig raw;
        for (const auto& [k, v] : entries) {
            raw[k] = {v, origin};
        }
        raw["preset"] = {std::string(name), origin};
        return raw;
    };
    // Best-effort axis ranges; the grids are 200-point defaults and can be
    // overridden like any other key.
    if (name == "fig1" || name == "fig2") {
        return make({{"tau", "0.01:5:200"}, {"theta_bar", "0,0.1"}, {"eta_bar", "0,0.1"},
                     {"scheme", "hurwitz"}});
    }
    if (name == "fig3" || name == "fig4") {
        return make({{"tau", "0.5,1,5,10"}, {"theta_bar", "0:10:41"}, {"eta_bar", "0:10:41"},
                     {"scheme", "hurwitz"}});
    }
    if (name == "fig5") {
        return make({{"tau", "0.01:100:200:log"}, {"theta_bar", "0,0.001"},
                     {"eta_bar", "0,0.001"}, {"scheme", "all"}});
    }
    throw ConfigError("preset", origin, "unknown preset (expected fig1..fig5)");
}

SweepConfig build_config(const RawConfig& file, const RawConfig& flags)
{
    RawConfig merged;
    std::optional<RawValue> preset;
    if (auto it = file.find("preset"); it != file.end()) {
        preset = it->second;
    }
    if (auto it = flags.find("preset"); it != flags.end()) {
        preset = it->second;
    }
    if (preset) {
        try {
            merged = preset_entries(preset->value);
        } catch (const ConfigError&) {
            throw ConfigError("preset", preset->origin, "unknown preset '" + preset->value + "'");
        }
    }
    for (const auto& [k, v] : file) {
        merged[k] = v;
    }
    for (const auto& [k, v] : flags) {
        merged[k] = v;
    }

    for (const auto& [k, v] : merged) {
        const auto& keys = known_keys();
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
            throw ConfigError(k, v.origin, "unknown key");
        }
    }

    SweepConfig config;
    const Reader read(merged);

    read.with("tau", [&](const std::string& v) {
        ValueList grid = parse_value_list(v);
        for (double tau : expand(grid)) {
            if (!(tau > 0.0)) {
                throw std::invalid_argument("reduced temperatures must be positive, got " +
                                            show(tau));
            }
        }
        config.tau_grid = std::move(grid);
    });
    read.with("theta_bar", [&](const std::string& v) { config.theta_bar_list = parse_parameter_list(v); });
    read.with("eta_bar", [&](const std::string& v) { config.eta_bar_list = parse_parameter_list(v); });
    read.with("scheme", [&](const std::string& v) {
        config.schemes.clear();
        for (std::string_view name : split(v, ',')) {
            if (name == "all") {
                config.schemes = {Scheme::DirectSum, Scheme::HurwitzZeta, Scheme::EulerMaclaurin};
                continue;
            }
            const auto scheme = parse_scheme(name);
            if (!scheme) {
                throw std::invalid_argument("unknown scheme '" + std::string(name) +
                                            "' (expected direct, hurwitz, em or all)");
            }
            if (std::find(config.schemes.begin(), config.schemes.end(), *scheme) ==
                config.schemes.end()) {
                config.schemes.push_back(*scheme);
            }
        }
    });
    read.with("particles", [&](const std::string& v) {
        const long long n = parse_integer(v);
        if (n < 1) {
            throw std::invalid_argument("particle count must be at least 1");
        }
        config.n_particles = static_cast<long>(n);
    });
    read.with("units", [&](const std::string& v) {
        if (v == "reduced") {
            config.unit_mode = UnitMode::Reduced;
        } else if (v == "si") {
            config.unit_mode = UnitMode::SI;
        } else {
            throw std::invalid_argument("units must be 'reduced' or 'si'");
        }
    });
    read.with("field", [&](const std::string& v) {
        const double b = parse_double(v);
        if (!(b > 0.0) || !std::isfinite(b)) {
            throw std::invalid_argument("magnetic field must be positive");
        }
        config.si_field = b;
    });
    read.with("levels", [&](const std::string& v) {
        const long long n = parse_integer(v);
        if (n < 1) {
            throw std::invalid_argument("level count must be at least 1");
        }
        config.levels = static_cast<std::size_t>(n);
    });
    read.with("dim", [&](const std::string& v) {
        const long long n = parse_integer(v);
        if (n < 2) {
            throw std::invalid_argument("Fock cutoff must be at least 2");
        }
        config.dim = static_cast<std::size_t>(n);
    });
    read.with("rel_tol", [&](const std::string& v) {
        const double tol = parse_double(v);
        if (!(tol > 0.0 && tol <= 1e-6)) {
            throw std::invalid_argument("rel_tol must lie in (0, 1e-6]");
        }
        config.sum_control.rel_tol = tol;
    });
    read.with("n_cap", [&](const std::string& v) {
        const long long n = parse_integer(v);
        if (n < 1000) {
            throw std::invalid_argument("n_cap must be at least 1000");
        }
        config.sum_control.n_cap = static_cast<std::size_t>(n);
    });
    read.with("format", [&](const std::string& v) {
        if (v == "csv") {
            config.output.format = OutputFormat::Csv;
        } else if (v == "json") {
            config.output.format = OutputFormat::Json;
        } else {
            throw std::invalid_argument("format must be 'csv' or 'json'");
        }
    });
    read.with("precision", [&](const std::string& v) {
        const long long p = parse_integer(v);
        if (p < 6 || p > 17) {
            throw std::invalid_argument("precision must be within [6, 17]");
        }
        config.output.precision = static_cast<int>(p);
    });
    read.with("out", [&](const std::string& v) { config.output.path = v; });
    read.with("preset", [&](const std::string& v) { config.preset = v; });

    const auto origin_of = [&](const char* key) {
        const auto it = merged.find(key);
        return it == merged.end() ? std::string("defaults") : it->second.origin;
    };
    if (config.unit_mode == UnitMode::SI && !config.si_field) {
        throw ConfigError("field", origin_of("units"), "SI units need a magnetic field");
    }
    return config;
}

SweepConfig load_config(const std::optional<std::filesystem::path>& path, const RawConfig& flags)
{
    const RawConfig file = path ? read_config_file(*path) : RawConfig{};
    return build_config(file, flags);
}

} // namespace ncg::sweep
