#include "zgap/output.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace zgap {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json cell_to_json(const Cell& cell) {
  return std::visit([](const auto& v) { return ordered_json(v); }, cell);
}

Cell json_to_cell(const ordered_json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  throw std::invalid_argument("unsupported JSON value in output record: " + j.dump());
}

ordered_json fields_to_json(const std::vector<Field>& fields) {
  ordered_json obj = ordered_json::object();
  for (const auto& [key, value] : fields) obj[key] = cell_to_json(value);
  return obj;
}

std::vector<Field> fields_from_json(const ordered_json& obj) {
  std::vector<Field> out;
  for (const auto& [key, value] : obj.items()) out.emplace_back(key, json_to_cell(value));
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

Cell infer_cell(const std::string& token) {
  if (token == "true") return true;
  if (token == "false") return false;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (token.find_first_of(".eE") == std::string::npos) {
    std::int64_t i = 0;
    const auto [ptr, ec] = std::from_chars(first, last, i);
    if (ec == std::errc{} && ptr == last && !token.empty()) return i;
  } else {
    double d = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, d);
    if (ec == std::errc{} && ptr == last) return d;
  }
  return token;
}

}  // namespace

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  return std::strtod(buf, nullptr);
}

void OutputRecord::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("output row width does not match the column count");
  }
  for (auto& cell : row) {
    if (auto* d = std::get_if<double>(&cell)) *d = round_significant(*d);
  }
  rows.push_back(std::move(row));
}

std::string format_cell(const Cell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  return cell_to_json(cell).dump();
}

std::string to_json(const OutputRecord& record) {
  ordered_json j;
  j["command"] = record.command;
  j["parameters"] = fields_to_json(record.parameters);
  j["columns"] = record.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : record.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[record.columns[i]] = cell_to_json(row[i]);
    rows.push_back(std::move(obj));
  }
  j["rows"] = std::move(rows);
  j["metadata"] = fields_to_json(record.metadata);
  return j.dump(2) + "\n";
}

OutputRecord record_from_json(std::string_view text) {
  const auto j = ordered_json::parse(text);
  OutputRecord record;
  record.command = j.at("command").get<std::string>();
  record.parameters = fields_from_json(j.at("parameters"));
  record.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& obj : j.at("rows")) {
    std::vector<Cell> row;
    row.reserve(record.columns.size());
    for (const auto& col : record.columns) row.push_back(json_to_cell(obj.at(col)));
    record.rows.push_back(std::move(row));
  }
  record.metadata = fields_from_json(j.at("metadata"));
  return record;
}

std::string to_csv(const OutputRecord& record) {
  std::string out;
  for (std::size_t i = 0; i < record.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_escape(record.columns[i]);
  }
  out += '\n';
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_escape(format_cell(row[i]));
    }
    out += '\n';
  }
  return out;
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (header) {
      table.columns = std::move(fields);
      header = false;
      continue;
    }
    if (fields.size() != table.columns.size()) {
      throw std::invalid_argument("CSV row width does not match the header");
    }
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(infer_cell(f));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace zgap
