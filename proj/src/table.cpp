#include "ptdefects/table.hpp"

#include <charconv>
#include <system_error>

#include <json.hpp>

namespace ptdefects {

namespace {

std::string to_chars_str(double v, int precision) {
  char buf[64];
  const auto res = precision < 0
                       ? std::to_chars(buf, buf + sizeof(buf), v)
                       : std::to_chars(buf, buf + sizeof(buf), v,
                                       std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_double(double v) { return to_chars_str(v, -1); }

std::string format_double_full(double v) { return to_chars_str(v, 17); }

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      if (row[c]) out += format_double_full(*row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::json j;
  j["command"] = table.name;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : table.params) params[key] = value;
  j["params"] = params;
  j["columns"] = table.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const auto& cell : row) {
      if (cell)
        jrow.push_back(*cell);
      else
        jrow.push_back(nullptr);
    }
    rows.push_back(std::move(jrow));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace ptdefects
