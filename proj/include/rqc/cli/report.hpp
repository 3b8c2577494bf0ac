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

#ifndef RQC_CLI_REPORT_HPP
#define RQC_CLI_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "rqc/cli/config.hpp"
#include "rqc/stats.hpp"

namespace rqc::cli {

/// One table cell. monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

struct RunReport {
  ExperimentConfig config;
  Table table;
  // Summaries of the named numeric columns, in column order.
  std::vector<std::pair<std::string, Summary>> summary;
  nlohmann::json extra = nlohmann::json::object();
  bool truncated = false;
  std::vector<std::string> errors;
  bool invariants_hold = true;
  double wall_clock_s = 0.0;

  /// 0 iff every trial completed and every per-sample invariant held.
  int exit_code() const {
    return (truncated || !errors.empty() || !invariants_hold) ? 1 : 0;
  }
  /// Fills `summary` for every column holding only numbers.
  void summarize_columns();
};

/// %.17g, with nan / inf / -inf for non-finite values.
std::string format_double(double x);
/// RFC 4180 quoting: fields with a comma, quote, CR or LF are quoted and
/// embedded quotes doubled.
std::string csv_escape(const std::string& field);

/// Header row plus data rows; no comment lines. This is the part that must
/// be identical across reruns.
std::string render_csv_body(const Table& table);
/// '#'-prefixed metadata lines followed by the body.
std::string render_csv(const RunReport& report);
std::string render_json(const RunReport& report);
std::string render(const RunReport& report);

/// Writes to stdout for "-", otherwise to a sibling temp file that is then
/// renamed over `path`.
void write_output(const std::string& path, const std::string& content);

}  // namespace rqc::cli

#endif  // RQC_CLI_REPORT_HPP
