#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ptdefects {

/// Tabular result of a command: named numeric columns plus stringified
/// run parameters.  Cells may be empty (no closed form for that row).
struct Table {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
};

/// Shortest round-trip decimal representation of v.
std::string format_double(double v);

/// 17-significant-digit representation used in CSV cells.
std::string format_double_full(double v);

/// Comma-separated, '.' decimal, one header row, 17 significant digits.
std::string to_csv(const Table& table);

/// JSON object {command, params, columns, rows}; conforms to
/// schemas/table.schema.json.
std::string to_json(const Table& table);

}  // namespace ptdefects
