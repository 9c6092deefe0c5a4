#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace compdist {

inline constexpr const char* kSchemaVersion = "1";

/// Up to 17 significant decimal digits: lossless for round-tripping
/// doubles through text.
std::string format_sig17(double value);

/// A rectangular table of already-formatted cells.  Every row carries the
/// schema version as its first column; numbers are decimal strings so CSV
/// and JSON renderings agree exactly.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  /// Throws InvariantError if the arity does not match the header.
  void add_row(std::vector<std::string> row);
};

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

}  // namespace compdist
