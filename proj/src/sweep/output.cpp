#include "ncg/sweep/output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace ncg::sweep {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

std::string format_number(double value, int precision)
{
    if (value == 0.0) {
        return "0";
    }
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buffer[64];
    const double mag = std::abs(value);
    if (mag >= 1e-4 && mag < 1e6) {
        std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
    } else {
        std::snprintf(buffer, sizeof buffer, "%.*e", precision - 1, value);
    }
    return buffer;
}

std::string to_csv(const Table& table, int precision)
{
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out += (i ? "," : "") + table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += std::visit(overloaded{
                                  [](std::monostate) { return std::string(); },
                                  [&](double v) { return format_number(v, precision); },
                                  [](std::int64_t v) { return std::to_string(v); },
                                  [](const std::string& v) { return v; },
                                  [](bool v) { return std::string(v ? "true" : "false"); },
                              },
                              row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table, int precision, std::string_view command)
{
    nlohmann::ordered_json doc;
    doc["command"] = std::string(command);
    doc["precision"] = precision;
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        auto cells = nlohmann::ordered_json::array();
        for (const Cell& cell : row) {
            std::visit(overloaded{
                           [&](std::monostate) { cells.push_back(nullptr); },
                           [&](double v) {
                               if (std::isfinite(v)) {
                                   cells.push_back(std::strtod(format_number(v, precision).c_str(), nullptr));
                               } else {
                                   cells.push_back(format_number(v, precision));
                               }
                           },
                           [&](std::int64_t v) { cells.push_back(v); },
                           [&](const std::string& v) { cells.push_back(v); },
                           [&](bool v) { cells.push_back(v); },
                       },
                       cell);
        }
        rows.push_back(std::move(cells));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(1) + "\n";
}

std::string render(const Table& table, const OutputSpec& output, std::string_view command)
{
    return output.format == OutputFormat::Json ? to_json(table, output.precision, command)
                                               : to_csv(table, output.precision);
}

void write_output(const std::string& text, const OutputSpec& output)
{
    if (output.path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) {
            throw IoError("failed writing to stdout");
        }
        return;
    }
    std::ofstream out(output.path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + output.path + "' for writing");
    }
    out << text;
    out.close();
    if (!out) {
        throw IoError("failed writing '" + output.path + "'");
    }
}

} // namespace ncg::sweep
