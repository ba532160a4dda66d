#pragma once

// Tabular reports and their CSV / JSON renderings. Numbers use the shortest
// decimal form that round-trips, so identical inputs give identical bytes.

#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ecodyn/error.hpp"
#include "ecodyn/odelin.hpp"

namespace ecodyn::io {

/// Raised for unwritable paths and failed renames.
class IoError : public Error {
 public:
  using Error::Error;
};

enum class Format { csv, json };

Format parse_format(const std::string& name);

using Cell = std::variant<double, std::string>;
using Scalar = std::variant<double, long long, bool, std::string>;

struct Column {
  std::string label;
  std::vector<Cell> values;
};

/// Columns of equal length; the first is the index column ("t" for trajectories).
struct Table {
  std::vector<Column> columns;

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().values.size(); }
  void add(std::string label, const std::vector<double>& values);
  void add(std::string label, std::vector<Cell> values);
};

struct Report {
  Table table;
  std::vector<std::pair<std::string, Scalar>> summary;

  void set(const std::string& key, Scalar value);
};

struct Meta {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;  ///< rendered in this order
};

/// t column followed by every trajectory component.
Table from_trajectory(const Trajectory& traj);

/// Shortest round-trip decimal; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double v);

/// CSV: the table (header row then one row per entry), or `key,value` rows
/// when the report has no table. JSON: {meta: {command, params, version,
/// summary?}, data: {label: [...]}}.
std::string render(const Report& report, Format format, const Meta& meta);

/// Writes to a sibling temporary file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace ecodyn::io
