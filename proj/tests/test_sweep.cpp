#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ncg/sweep/commands.hpp"
#include "ncg/sweep/config.hpp"
#include "ncg/sweep/output.hpp"
#include "ncg/thermo.hpp"

using namespace ncg;
using namespace ncg::sweep;

namespace {

RawConfig flags(std::initializer_list<std::pair<const char*, const char*>> entries)
{
    RawConfig raw;
    for (const auto& [k, v] : entries) {
        raw[k] = {v, std::string("--") + k};
    }
    return raw;
}

SweepConfig config_from(std::initializer_list<std::pair<const char*, const char*>> entries)
{
    return build_config({}, flags(entries));
}

double as_double(const Cell& c) { return std::get<double>(c); }

std::size_t column(const Table& t, const std::string& name)
{
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (t.columns[i] == name) {
            return i;
        }
    }
    FAIL("missing column " << name);
    return 0;
}

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

} // namespace

TEST_CASE("empty configuration gives the documented defaults")
{
    const SweepConfig c = build_config({}, {});
    CHECK(c.unit_mode == UnitMode::Reduced);
    REQUIRE(c.schemes.size() == 1);
    CHECK(c.schemes[0] == Scheme::HurwitzZeta);
    CHECK(c.n_particles == 1);
    CHECK(c.output.precision == 12);
    CHECK(c.output.format == OutputFormat::Csv);
    CHECK(c.output.path == "-");
    CHECK(c.theta_bar_list == std::vector<double>{0.0});
    CHECK(c.eta_bar_list == std::vector<double>{0.0});
    CHECK(c.taus().size() == 200);
    CHECK(c.sum_control.rel_tol == 1e-12);
    CHECK(c.sum_control.n_cap == 10'000'000);
    CHECK_FALSE(c.preset.has_value());
}

TEST_CASE("flags override file values")
{
    const RawConfig file = parse_config_text("tau = 2\nscheme = em\n", "run.cfg");
    const SweepConfig c = build_config(file, flags({{"tau", "1"}}));
    REQUIRE(c.taus().size() == 1);
    CHECK(c.taus()[0] == 1.0);
    CHECK(c.schemes[0] == Scheme::EulerMaclaurin);
}

TEST_CASE("config validation diagnostics")
{
    SUBCASE("negative tau in a file")
    {
        const RawConfig file = parse_config_text("# comment\n\ntau = -1\n", "run.cfg");
        try {
            build_config(file, {});
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(e.field() == "tau");
            CHECK(e.origin() == "run.cfg:3");
        }
    }
    SUBCASE("unknown key")
    {
        try {
            parse_config_text("tau = 1\ncolour = blue\n", "x.cfg");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(e.field() == "colour");
            CHECK(e.origin() == "x.cfg:2");
        }
        CHECK_THROWS_AS(build_config({}, flags({{"bogus", "1"}})), ConfigError);
    }
    SUBCASE("malformed lines and grids")
    {
        CHECK_THROWS_AS(parse_config_text("tau 1\n", "x"), ConfigError);
        CHECK_THROWS_AS(parse_config_text("tau =\n", "x"), ConfigError);
        CHECK_THROWS_AS(config_from({{"tau", "1:2"}}), ConfigError);
        CHECK_THROWS_AS(config_from({{"tau", "1:2:0"}}), ConfigError);
        CHECK_THROWS_AS(config_from({{"tau", "0:2:5:log"}}), ConfigError);
        CHECK_THROWS_AS(config_from({{"tau", "1:2:5:cubic"}}), ConfigError);
        CHECK_THROWS_AS(config_from({{"tau", "abc"}}), ConfigError);
        CHECK_THROWS_AS(config_from({{"tau", "0:1:3"}}), ConfigError);
        CHECK_THROWS_AS(config_from({{"theta_bar", "0,-0.1"}}), ConfigError);
        CHECK_THROWS_AS(config_from({{"eta_bar", "0,,1"}}), ConfigError);
    }
    SUBCASE("scalar fields")
    {
        CHECK_THROWS_AS(config_from({{"precision", "5"}}), ConfigError);
        CHECK_THROWS_AS(config_from({{"precision", "18"}}), ConfigError);
        CHECK_NOTHROW(config_from({{"precision", "17"}}));
        CHECK_THROWS_AS(config_from({{"particles", "0"}}), ConfigError);
        CHECK_THROWS_AS(config_from({{"scheme", "zeta"}}), ConfigError);
        CHECK_THROWS_AS(config_from({{"format", "xml"}}), ConfigError);
        CHECK_THROWS_AS(config_from({{"rel_tol", "1e-3"}}), ConfigError);
        CHECK_THROWS_AS(config_from({{"n_cap", "10"}}), ConfigError);
        CHECK_THROWS_AS(config_from({{"units", "si"}}), ConfigError);
        CHECK_THROWS_AS(config_from({{"preset", "fig9"}}), ConfigError);
        CHECK_NOTHROW(config_from({{"units", "si"}, {"field", "2.5"}}));
    }
    SUBCASE("missing file")
    {
        CHECK_THROWS_AS(load_config(std::filesystem::path("/nonexistent/run.cfg"), {}), ConfigError);
    }
}

TEST_CASE("grid expansion")
{
    const auto lin = expand(parse_value_list("0:1:5"));
    CHECK(lin == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    const auto lg = expand(parse_value_list("0.01:100:5:log"));
    REQUIRE(lg.size() == 5);
    CHECK(lg[0] == 0.01);
    CHECK(lg[2] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lg[4] == 100.0);
    const auto mixed = expand(parse_value_list("0.5, 1:2:3, 10"));
    CHECK(mixed == std::vector<double>{0.5, 1.0, 1.5, 2.0, 10.0});

    const SweepConfig all = config_from({{"scheme", "all"}});
    CHECK(all.schemes.size() == 3);
}

TEST_CASE("presets")
{
    for (const char* name : {"fig1", "fig2"}) {
        const SweepConfig c = config_from({{"preset", name}});
        std::set<std::pair<double, double>> pairs;
        for (double t : c.theta_bar_list) {
            for (double e : c.eta_bar_list) {
                pairs.insert({t, e});
            }
        }
        CHECK(pairs == std::set<std::pair<double, double>>{{0, 0}, {0.1, 0}, {0, 0.1}, {0.1, 0.1}});
        CHECK(c.taus().size() == 200);
        CHECK(c.taus().front() > 0.0);
        CHECK(c.taus().back() == 5.0);
        CHECK(c.preset == std::string(name));
    }
    const SweepConfig fig5 = config_from({{"preset", "fig5"}});
    CHECK(fig5.theta_bar_list == std::vector<double>{0.0, 0.001});
    CHECK(fig5.taus().back() == 100.0);
    const SweepConfig fig3 = config_from({{"preset", "fig3"}});
    CHECK(fig3.theta_bar_list.back() == 10.0);

    // Explicit values beat the preset.
    const SweepConfig over = config_from({{"preset", "fig1"}, {"tau", "3"}});
    CHECK(over.taus() == std::vector<double>{3.0});
}

TEST_CASE("number formatting")
{
    CHECK(format_number(0.0, 12) == "0");
    CHECK(format_number(1.5, 12) == "1.5");
    CHECK(format_number(1e-4, 6) == "0.0001");
    CHECK(format_number(9.9e-5, 6) == "9.90000e-05");
    CHECK(format_number(999999.0, 12) == "999999");
    CHECK(format_number(1e6, 8) == "1.0000000e+06");
    CHECK(format_number(-2.0 / 3.0, 6) == "-0.666667");
    CHECK(format_number(25.5, 12) == "25.5");
}

TEST_CASE("spectrum command")
{
    const CommandResult r = cmd_spectrum(config_from({{"levels", "4"}}));
    const std::size_t e = column(r.table, "energy_reduced");
    const std::size_t band = column(r.table, "band");
    REQUIRE(r.table.rows.size() == 8);
    const double expected[] = {0.0, 1.0, std::sqrt(2.0), std::sqrt(3.0)};
    for (std::size_t n = 0; n < 4; ++n) {
        CHECK(as_double(r.table.rows[n][e]) == doctest::Approx(expected[n]).epsilon(1e-15));
        CHECK(std::get<std::int64_t>(r.table.rows[n][band]) == 1);
        CHECK(as_double(r.table.rows[4 + n][e]) == -as_double(r.table.rows[n][e]));
        CHECK(std::get<std::int64_t>(r.table.rows[4 + n][band]) == -1);
    }

    const CommandResult d = cmd_spectrum(config_from({{"levels", "2"}, {"theta_bar", "0.1"}, {"eta_bar", "0.1"}}));
    CHECK(as_double(d.table.rows[1][e]) == doctest::Approx(1.148913).epsilon(1e-6));

    const CommandResult si = cmd_spectrum(config_from({{"levels", "3"}, {"units", "si"}, {"field", "1"}}));
    CHECK(as_double(si.table.rows[1][e]) == 1.0);
    CHECK(as_double(si.table.rows[1][column(si.table, "energy")]) ==
          doctest::Approx(PhysicalScales::si_for_field(1.0).kappa()).epsilon(1e-14));
}

TEST_CASE("partition command")
{
    const CommandResult r = cmd_partition(config_from({{"preset", "fig1"}, {"tau", "5"}}));
    REQUIRE(r.table.columns == run_record_columns());
    REQUIRE(r.table.rows.size() == 4);
    const std::size_t z = column(r.table, "z");
    const std::size_t th = column(r.table, "theta_bar");
    const std::size_t et = column(r.table, "eta_bar");
    double max_z = 0.0;
    double min_z = 1e300;
    for (const auto& row : r.table.rows) {
        max_z = std::max(max_z, as_double(row[z]));
        min_z = std::min(min_z, as_double(row[z]));
        CHECK(std::holds_alternative<std::monostate>(row[column(r.table, "f_bar")]));
        CHECK(std::holds_alternative<std::monostate>(row[column(r.table, "tail_bound")]));
    }
    // Rows ordered by (theta_bar, eta_bar): (0,0), (0,0.1), (0.1,0), (0.1,0.1).
    CHECK(as_double(r.table.rows[0][th]) == 0.0);
    CHECK(as_double(r.table.rows[0][et]) == 0.0);
    CHECK(as_double(r.table.rows[1][et]) == 0.1);
    CHECK(as_double(r.table.rows[2][th]) == 0.1);
    CHECK(as_double(r.table.rows[0][z]) == 25.5);
    CHECK(as_double(r.table.rows[0][z]) == max_z);
    CHECK(as_double(r.table.rows[3][z]) == doctest::Approx(0.5 + 25.0 / 1.32).epsilon(1e-14));
    CHECK(as_double(r.table.rows[3][z]) == min_z);

    const CommandResult grid = cmd_partition(
        config_from({{"tau", "1"}, {"theta_bar", "0,0.05,0.1"}, {"eta_bar", "0,0.1"}, {"scheme", "em"}}));
    CHECK(grid.table.rows.size() == 6);

    const CommandResult direct = cmd_partition(config_from({{"tau", "1"}, {"scheme", "direct"}}));
    CHECK(std::holds_alternative<double>(direct.table.rows[0][column(direct.table, "tail_bound")]));
    CHECK(std::get<bool>(direct.table.rows[0][column(direct.table, "converged")]));

    const CommandResult capped =
        cmd_partition(config_from({{"tau", "100"}, {"scheme", "direct"}, {"n_cap", "1000"}}));
    CHECK(capped.exit_code == exit_non_convergence);
    CHECK_FALSE(std::get<bool>(capped.table.rows[0][column(capped.table, "converged")]));
    CHECK(capped.diagnostics.size() == 1);
}

TEST_CASE("thermo command")
{
    const CommandResult r = cmd_thermo(config_from({{"tau", "1"}}));
    REQUIRE(r.table.rows.size() == 1);
    const ThermoPoint p = thermo_point(z_hurwitz(1.0, {}), 1);
    const auto& row = r.table.rows[0];
    CHECK(as_double(row[column(r.table, "f_bar")]) == p.f_bar);
    CHECK(as_double(row[column(r.table, "u_bar")]) == p.u_bar);
    CHECK(as_double(row[column(r.table, "s_bar")]) == p.s_bar);
    CHECK(as_double(row[column(r.table, "c_bar")]) == p.c_bar);

    const auto base = config_from({{"tau", "0.5:3:6"}, {"scheme", "all"}, {"theta_bar", "0,0.1"}});
    auto scaled = base;
    scaled.n_particles = 100;
    const CommandResult one = cmd_thermo(base);
    const CommandResult hundred = cmd_thermo(scaled);
    REQUIRE(one.table.rows.size() == 36);
    for (std::size_t i = 0; i < one.table.rows.size(); ++i) {
        for (const char* col : {"f_bar", "u_bar", "s_bar", "c_bar"}) {
            const std::size_t k = column(one.table, col);
            CHECK(as_double(hundred.table.rows[i][k]) == 100.0 * as_double(one.table.rows[i][k]));
        }
    }

    const CommandResult extended = cmd_thermo(config_from({{"tau", "1"}, {"theta_bar", "10"}, {"eta_bar", "10"}, {"scheme", "all"}}));
    CHECK(deformation_a({10, 10}) == 231.0);
    for (const auto& erow : extended.table.rows) {
        for (const char* col : {"z", "f_bar", "u_bar", "s_bar", "c_bar"}) {
            CHECK(std::isfinite(as_double(erow[column(extended.table, col)])));
        }
    }

    CHECK_THROWS_AS(cmd_thermo(config_from({{"tau", "5e-4"}, {"scheme", "direct"}})), ConfigError);
    CHECK_NOTHROW(cmd_thermo(config_from({{"tau", "5e-4"}, {"scheme", "hurwitz"}})));
}

TEST_CASE("compare command")
{
    const CommandResult r = cmd_compare(config_from({{"tau", "100"}}));
    REQUIRE(r.table.rows.size() == 1);
    const std::size_t rel = column(r.table, "rel_err_em_vs_hurwitz");
    CHECK(as_double(r.table.rows[0][rel]) == doctest::Approx(0.499).epsilon(0.003));
    CHECK(std::get<bool>(r.table.rows[0][column(r.table, "direct_converged")]));

    const CommandResult scan = cmd_compare(config_from({{"tau", "0.1:2:191"}}));
    std::size_t best = 0;
    for (std::size_t i = 0; i < scan.table.rows.size(); ++i) {
        if (as_double(scan.table.rows[i][rel]) < as_double(scan.table.rows[best][rel])) {
            best = i;
        }
    }
    CHECK(best > 0);
    CHECK(best + 1 < scan.table.rows.size());
    CHECK(as_double(scan.table.rows[best][column(scan.table, "tau")]) == doctest::Approx(0.55).epsilon(0.03));

    // The deformed inset preset lowers the relative error at matched tau on
    // the high-temperature side of the minimum.
    const CommandResult inset = cmd_compare(config_from({{"preset", "fig5"}, {"tau", "1:100:12:log"}}));
    const std::size_t n_tau = 12;
    REQUIRE(inset.table.rows.size() == 4 * n_tau);
    for (std::size_t i = 0; i < n_tau; ++i) {
        const double commutative = as_double(inset.table.rows[i][rel]);
        const double deformed = as_double(inset.table.rows[3 * n_tau + i][rel]);
        CHECK(deformed < commutative);
    }

    // The error depends on tau / sqrt(A) only, so below the minimum the
    // ordering reverses.
    const double a = deformation_a({0.001, 0.001});
    for (double tau : {0.2, 0.4, 2.0, 30.0}) {
        CHECK(relative_error(tau * std::sqrt(a), {0.001, 0.001}) ==
              doctest::Approx(relative_error(tau, {})).epsilon(1e-12));
    }
    CHECK(relative_error(0.2, {0.001, 0.001}) > relative_error(0.2, {}));
}

TEST_CASE("fock-check command")
{
    const CommandResult ok = cmd_fock_check(config_from({{"dim", "32"}}));
    CHECK(ok.exit_code == exit_success);
    CHECK(ok.table.rows.size() == 64);

    const CommandResult both = cmd_fock_check(config_from({{"dim", "32"}, {"theta_bar", "0,0.05"}, {"eta_bar", "0.05"}}));
    REQUIRE(both.table.rows.size() == 128);
    const std::size_t num = column(both.table, "numeric");
    const std::size_t lvl = column(both.table, "n");
    for (std::size_t i = 0; i < 64; ++i) {
        if (std::get<std::int64_t>(both.table.rows[i][lvl]) != 0) {
            const double ratio = as_double(both.table.rows[64 + i][num]) / as_double(both.table.rows[i][num]);
            CHECK(ratio == doctest::Approx(std::sqrt(1.155 / 1.05)).epsilon(1e-9));
        }
    }

    CHECK_THROWS_AS(cmd_fock_check(config_from({{"dim", "4"}})), ConfigError);
    CHECK_THROWS_AS(cmd_fock_check(config_from({{"dim", "513"}})), ConfigError);
    std::ostringstream err;
    CHECK(execute(Command::FockCheck, config_from({{"dim", "4"}}), err) == exit_config_error);
}

TEST_CASE("csv and json carry the same values")
{
    const CommandResult r = cmd_thermo(config_from({{"tau", "0.01:20:9"}, {"scheme", "all"}}));
    for (int precision : {6, 12, 17}) {
        const std::string csv = to_csv(r.table, precision);
        const auto doc = nlohmann::json::parse(to_json(r.table, precision, "thermo"));
        CHECK(doc["command"] == "thermo");
        REQUIRE(doc["columns"].size() == r.table.columns.size());

        std::istringstream lines(csv);
        std::string header;
        std::getline(lines, header);
        CHECK(split_csv_line(header).size() == r.table.columns.size());
        std::size_t i = 0;
        for (std::string line; std::getline(lines, line); ++i) {
            const auto cells = split_csv_line(line);
            const auto& jrow = doc["rows"][i];
            REQUIRE(cells.size() == jrow.size());
            for (std::size_t k = 0; k < cells.size(); ++k) {
                if (jrow[k].is_number_float()) {
                    // Re-parsed JSON reproduces the emitted CSV value exactly.
                    CHECK(jrow[k].get<double>() == std::strtod(cells[k].c_str(), nullptr));
                    CHECK(format_number(jrow[k].get<double>(), precision) == cells[k]);
                } else if (jrow[k].is_null()) {
                    CHECK(cells[k].empty());
                }
            }
        }
        CHECK(i == r.table.rows.size());
    }
}

TEST_CASE("output is identical in serial and parallel mode")
{
    const SweepConfig c = config_from({{"preset", "fig5"}, {"tau", "0.05:30:25:log"}});
    const std::string parallel = to_csv(cmd_compare(c).table, 12);
    setenv("NC_GRAPHENE_NO_PARALLEL", "1", 1);
    const std::string serial = to_csv(cmd_compare(c).table, 12);
    unsetenv("NC_GRAPHENE_NO_PARALLEL");
    CHECK(parallel == serial);
    CHECK(parallel == to_csv(cmd_compare(c).table, 12));
}

TEST_CASE("execute writes files and reports i/o failures")
{
    const auto path = std::filesystem::temp_directory_path() / "ncg_test_partition.csv";
    SweepConfig c = config_from({{"tau", "1,2"}});
    c.output.path = path.string();
    std::ostringstream err;
    CHECK(execute(Command::Partition, c, err) == exit_success);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "tau,theta_bar,eta_bar,scheme,n_particles,z,f_bar,u_bar,s_bar,c_bar,tail_bound,converged");
    std::string first;
    std::getline(in, first);
    CHECK(first == "1,0,0,hurwitz,1,1.5,,,,,,true");
    std::filesystem::remove(path);

    c.output.path = "/nonexistent-dir/out.csv";
    CHECK(execute(Command::Partition, c, err) == exit_io_error);
}
