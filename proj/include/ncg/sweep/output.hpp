#pragma once

// Tabular output of sweep results as CSV or JSON.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ncg/sweep/config.hpp"

namespace ncg::sweep {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Empty cell, number, integer, text or flag.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// precision significant digits; plain notation for 1e-4 <= |x| < 1e6,
/// scientific otherwise. Zero prints as "0".
std::string format_number(double value, int precision);

/// Header row, then one line per row; empty cells stay empty.
std::string to_csv(const Table& table, int precision);

/// {"command": ..., "columns": [...], "rows": [[...], ...]}. Numbers carry the
/// same rounded value the CSV shows; empty cells are null.
std::string to_json(const Table& table, int precision, std::string_view command);

std::string render(const Table& table, const OutputSpec& output, std::string_view command);

/// Writes to output.path, or stdout for "-". Throws IoError.
void write_output(const std::string& text, const OutputSpec& output);

} // namespace ncg::sweep
