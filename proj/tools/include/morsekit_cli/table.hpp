#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace morsekit::cli {

/// One CSV/JSON cell. monostate is an empty cell.
using Cell = std::variant<std::monostate, double, long long, std::string>;

/// Ordered key=value pairs describing the run, written as the leading
/// comment line of every CSV and as "config" in JSON.
struct RunRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> entries;

  void add(std::string key, std::string value) { entries.emplace_back(std::move(key), std::move(value)); }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Extra "# key: value" lines placed after the config line.
  std::vector<std::pair<std::string, std::string>> notes;
};

enum class Format { csv, json };

/// Shortest decimal string that parses back to the same double; "inf",
/// "-inf" and "nan" for non-finite values.
std::string format_double(double value);

void write_table(std::ostream& out, const RunRecord& run, const Table& table, Format format);

/// Writes to path, creating parent directories. Throws Error(io).
void write_table_file(const std::string& path, const RunRecord& run, const Table& table,
                      Format format);

}  // namespace morsekit::cli
