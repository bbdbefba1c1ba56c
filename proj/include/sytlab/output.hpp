#pragma once

/// @file output.hpp
/// @brief Output records shared by every CLI command and their table, JSON and
/// CSV renderings. All three render the same string cells, so numeric values
/// agree across formats by construction. Integers are always decimal strings.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace sytlab {

enum class RecordKind { count, verdict, trace, table };
enum class OutputFormat { table, json, csv };

inline constexpr std::string_view kind_name(RecordKind k) {
  switch (k) {
    case RecordKind::count: return "count";
    case RecordKind::verdict: return "verdict";
    case RecordKind::trace: return "trace";
    case RecordKind::table: return "table";
  }
  return "?";
}

inline std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  return std::nullopt;
}

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  Table& add(std::vector<std::string> row) {
    rows.push_back(std::move(row));
    return *this;
  }
};

struct OutputRecord {
  RecordKind kind = RecordKind::table;
  std::vector<Table> tables;

  Table& table(std::string name, std::vector<std::string> columns) {
    tables.push_back({std::move(name), std::move(columns), {}});
    return tables.back();
  }

  /// Appends the tables of another record of the same kind.
  void merge(const OutputRecord& other) {
    for (const auto& t : other.tables) {
      auto it = std::ranges::find_if(tables, [&](const Table& mine) { return mine.name == t.name; });
      if (it != tables.end() && it->columns == t.columns) {
        it->rows.insert(it->rows.end(), t.rows.begin(), t.rows.end());
      } else {
        tables.push_back(t);
      }
    }
  }
};

namespace detail {

inline std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const OutputRecord& record) {
  nlohmann::ordered_json doc;
  doc["kind"] = kind_name(record.kind);
  nlohmann::ordered_json tables = nlohmann::ordered_json::object();
  for (const auto& t : record.tables) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < t.columns.size() && c < row.size(); ++c) obj[t.columns[c]] = row[c];
      rows.push_back(std::move(obj));
    }
    tables[t.name] = std::move(rows);
  }
  doc["tables"] = std::move(tables);
  return doc;
}

inline std::string render(const OutputRecord& record, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json:
      out << to_json(record).dump(2) << "\n";
      break;
    case OutputFormat::csv:
      for (const auto& t : record.tables) {
        out << "# " << t.name << "\n";
        for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << detail::csv_escape(t.columns[c]);
        out << "\n";
        for (const auto& row : t.rows) {
          for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << detail::csv_escape(row[c]);
          out << "\n";
        }
      }
      break;
    case OutputFormat::table:
      for (std::size_t ti = 0; ti < record.tables.size(); ++ti) {
        const auto& t = record.tables[ti];
        if (ti > 0) out << "\n";
        out << t.name << "\n";
        std::vector<std::size_t> width(t.columns.size());
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
          width[c] = t.columns[c].size();
          for (const auto& row : t.rows) {
            if (c < row.size()) width[c] = std::max(width[c], row[c].size());
          }
        }
        auto line = [&](const std::vector<std::string>& cells) {
          std::string text;
          for (std::size_t c = 0; c < cells.size() && c < width.size(); ++c) {
            if (c) text += "  ";
            text += cells[c] + std::string(width[c] - cells[c].size(), ' ');
          }
          while (!text.empty() && text.back() == ' ') text.pop_back();
          out << "  " << text << "\n";
        };
        line(t.columns);
        for (const auto& row : t.rows) line(row);
      }
      break;
  }
  return out.str();
}

}  // namespace sytlab
