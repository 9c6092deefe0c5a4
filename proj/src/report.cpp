#include "compdist/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "compdist/errors.hpp"

namespace compdist {

std::string format_sig17(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size())
    throw InvariantError("table row arity does not match the header");
  rows.push_back(std::move(row));
}

namespace {

void write_csv_cell(const std::string& cell, std::ostream& out) {
  if (cell.find_first_of(",\"\n") == std::string::npos) {
    out << cell;
    return;
  }
  out << '"';
  for (const char ch : cell) {
    if (ch == '"') out << '"';
    out << ch;
  }
  out << '"';
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i != 0) out << ',';
    write_csv_cell(table.columns[i], out);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out << ',';
      write_csv_cell(row[i], out);
    }
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json object;
    for (std::size_t i = 0; i < row.size(); ++i) object[table.columns[i]] = row[i];
    array.push_back(std::move(object));
  }
  out << array.dump(2) << '\n';
}

}  // namespace compdist
