#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace zgap {

using Cell = std::variant<std::int64_t, double, std::string, bool>;
using Field = std::pair<std::string, Cell>;

/// Rounds to the given number of significant decimal digits.
double round_significant(double x, int digits = 9);

/// Result of one CLI invocation: a table of uniform rows plus context.
struct OutputRecord {
  std::string command;
  std::vector<Field> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<Field> metadata;

  /// Appends a row; doubles are rounded to 9 significant digits.
  /// Throws std::invalid_argument if the width differs from columns.
  void add_row(std::vector<Cell> row);

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

std::string to_json(const OutputRecord& record);
OutputRecord record_from_json(std::string_view text);

/// Header line plus one line per row; parameters and metadata are not included.
std::string to_csv(const OutputRecord& record);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Reads the output of to_csv back, inferring int / double / bool / string cells.
CsvTable parse_csv(std::string_view text);

/// Text form of a cell as it appears in both the JSON and CSV encodings.
std::string format_cell(const Cell& cell);

}  // namespace zgap
