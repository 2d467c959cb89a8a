#include "morsekit_cli/table.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>

#include "morsekit/errors.hpp"

namespace morsekit::cli {
namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return csv_escape(v); }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const {
      // JSON has no infinities; keep them distinguishable from blanks.
      if (std::isfinite(v)) return v;
      return format_double(v);
    }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

void write_csv(std::ostream& out, const RunRecord& run, const Table& table) {
  out << "# morsekit " << run.command;
  for (const auto& [key, value] : run.entries) out << ' ' << key << '=' << value;
  out << '\n';
  for (const auto& [key, value] : table.notes) out << "# " << key << ": " << value << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << csv_escape(table.columns[i]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const RunRecord& run, const Table& table) {
  nlohmann::ordered_json doc;
  doc["command"] = run.command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto& [key, value] : run.entries) config[key] = value;
  doc["config"] = config;
  for (const auto& [key, value] : table.notes) doc["notes"][key] = value;
  doc["columns"] = table.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& cell : row) r.push_back(cell_json(cell));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(1) << '\n';
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void write_table(std::ostream& out, const RunRecord& run, const Table& table, Format format) {
  if (format == Format::csv) {
    write_csv(out, run, table);
  } else {
    write_json(out, run, table);
  }
}

void write_table_file(const std::string& path, const RunRecord& run, const Table& table,
                      Format format) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path(), ec);
  std::ofstream file(target, std::ios::binary);
  if (!file) throw Error(ErrorKind::io, "cannot open '" + path + "' for writing");
  write_table(file, run, table, format);
  file.flush();
  if (!file) throw Error(ErrorKind::io, "failed writing '" + path + "'");
}

}  // namespace morsekit::cli
