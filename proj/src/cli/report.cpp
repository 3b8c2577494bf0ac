// Copyright 2026 The rqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rqc/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

namespace rqc::cli {
namespace {

std::string render_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& v) const { return csv_escape(v); }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(std::int64_t v) const { return v; }
    nlohmann::json operator()(double v) const {
      // JSON has no nan / inf; emit them as strings.
      if (!std::isfinite(v)) return format_double(v);
      return v;
    }
    nlohmann::json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::json summary_json(const RunReport& report) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [name, s] : report.summary) {
    out[name] = {{"count", s.count}, {"mean", s.mean}, {"se", s.se},
                 {"min", s.min},     {"max", s.max}};
  }
  return out;
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("Table::add_row: row has " +
                           std::to_string(row.size()) + " cells, expected " +
                           std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

void RunReport::summarize_columns() {
  summary.clear();
  if (table.rows.empty()) return;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    std::vector<double> values;
    bool numeric = true;
    for (const auto& row : table.rows) {
      if (const auto* v = std::get_if<double>(&row[c])) {
        if (std::isfinite(*v)) values.push_back(*v);
      } else if (!std::holds_alternative<std::monostate>(row[c])) {
        numeric = false;
        break;
      }
    }
    if (numeric && !values.empty()) {
      summary.emplace_back(table.columns[c], summarize(values));
    }
  }
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string render_csv_body(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += csv_escape(table.columns[c]);
  }
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += render_cell(row[c]);
    }
    out += "\n";
  }
  return out;
}

std::string render_csv(const RunReport& report) {
  std::ostringstream os;
  os << "# version: " << version_string() << "\n";
  os << "# rerun: " << report.config.rerun_command() << "\n";
  os << "# config: " << report.config.to_json().dump() << "\n";
  os << "# wall_clock_s: " << format_double(report.wall_clock_s) << "\n";
  os << "# truncated: " << (report.truncated ? "true" : "false") << "\n";
  for (const auto& e : report.errors) os << "# error: " << e << "\n";
  if (!report.summary.empty()) {
    os << "# summary: " << summary_json(report).dump() << "\n";
  }
  if (!report.extra.empty()) os << "# extra: " << report.extra.dump() << "\n";
  os << render_csv_body(report.table);
  return os.str();
}

std::string render_json(const RunReport& report) {
  nlohmann::json j;
  j["version"] = version_string();
  j["config"] = report.config.to_json();
  j["rerun"] = report.config.rerun_command();
  j["wall_clock_s"] = report.wall_clock_s;
  j["columns"] = report.table.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.table.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) r.push_back(cell_json(cell));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["summary"] = summary_json(report);
  j["extra"] = report.extra;
  j["truncated"] = report.truncated;
  j["errors"] = report.errors;
  j["invariants_hold"] = report.invariants_hold;
  return j.dump(2) + "\n";
}

std::string render(const RunReport& report) {
  return report.config.format == Format::kJson ? render_json(report)
                                               : render_csv(report);
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content << std::flush;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os << content;
    os.flush();
    if (!os) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path + ": " + ec.message());
  }
}

}  // namespace rqc::cli
