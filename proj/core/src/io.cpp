#include "ecodyn/io.hpp"

#include <unistd.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>

#include "ecodyn/version.hpp"

namespace ecodyn::io {

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw ValidationError("unknown format '" + name + "' (expected csv or json)");
}

void Table::add(std::string label, const std::vector<double>& values) {
  add(std::move(label), std::vector<Cell>(values.begin(), values.end()));
}

void Table::add(std::string label, std::vector<Cell> values) {
  if (!columns.empty() && values.size() != rows()) {
    throw ValidationError("column '" + label + "' has " + std::to_string(values.size()) + " rows, expected " +
                          std::to_string(rows()));
  }
  columns.push_back({std::move(label), std::move(values)});
}

void Report::set(const std::string& key, Scalar value) {
  for (auto& [k, v] : summary) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  summary.emplace_back(key, std::move(value));
}

Table from_trajectory(const Trajectory& traj) {
  Table t;
  std::vector<double> times;
  for (std::size_t k = 0; k < traj.size(); ++k) times.push_back(traj.time(k));
  t.add("t", times);
  for (std::size_t i = 0; i < traj.dimension(); ++i) t.add(traj.labels()[i], traj.component(i));
  return t;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_cell(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_number(*d);
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string scalar_text(const Scalar& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_number(v);
        else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return v;
      },
      s);
}

nlohmann::ordered_json json_number(double v) {
  if (!std::isfinite(v)) return format_number(v);
  return v;
}

nlohmann::ordered_json json_scalar(const Scalar& s) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return json_number(v);
        else return v;
      },
      s);
}

std::string render_csv(const Report& report) {
  std::string out;
  if (report.table.columns.empty()) {
    out += "key,value\n";
    for (const auto& [k, v] : report.summary) out += csv_cell(k) + "," + csv_cell(scalar_text(v)) + "\n";
    return out;
  }
  const auto& cols = report.table.columns;
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + csv_cell(cols[i].label);
  out += "\n";
  for (std::size_t r = 0; r < report.table.rows(); ++r) {
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + csv_cell(cols[i].values[r]);
    out += "\n";
  }
  return out;
}

std::string render_json(const Report& report, const Meta& meta) {
  nlohmann::ordered_json doc;
  doc["meta"]["command"] = meta.command;
  doc["meta"]["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta.params) doc["meta"]["params"][k] = v;
  doc["meta"]["version"] = kVersion;
  if (!report.summary.empty()) {
    for (const auto& [k, v] : report.summary) doc["meta"]["summary"][k] = json_scalar(v);
  }
  doc["data"] = nlohmann::ordered_json::object();
  for (const auto& col : report.table.columns) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : col.values) {
      if (const double* d = std::get_if<double>(&c)) arr.push_back(json_number(*d));
      else arr.push_back(std::get<std::string>(c));
    }
    doc["data"][col.label] = std::move(arr);
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render(const Report& report, Format format, const Meta& meta) {
  return format == Format::csv ? render_csv(report) : render_json(report, meta);
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignore;
    fs::remove(tmp, ignore);
    throw IoError("cannot move output into place at " + path.string() + ": " + ec.message());
  }
}

}  // namespace ecodyn::io
