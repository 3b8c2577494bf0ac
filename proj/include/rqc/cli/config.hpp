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

#ifndef RQC_CLI_CONFIG_HPP
#define RQC_CLI_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace rqc::cli {

enum class Format { kCsv, kJson };
enum class Mode { kAuto, kDense, kMatrixFree };

/// Environment variable consulted for the master seed when --seed is absent.
inline constexpr const char* kSeedEnv = "RQC_SEED";

std::string version_string();

struct ExperimentConfig {
  std::string subcommand;

  // Channel dimensions. For gap / gaussian / moments exactly one of d and
  // lambda is given on the command line; the other is derived.
  long n = 0;
  long d = 0;
  long k = 0;
  std::optional<double> lambda_given;
  double lambda_realized = 0.0;

  int p = 1;                  // moments
  bool allow_order3 = false;  // moments
  long bond = 0;              // mps: D
  int sites = 0;              // mps: l
  int depth = 0;              // mps: t, 0 = default
  long m = 0;                 // twirl: rows M
  long twirl_n = 0;           // twirl: columns N
  long chi_trials = 0;        // gaussian: trials for chi_hat_{nk,d}
  double k_lo = 0.0;          // bounds grid
  double k_hi = 0.0;
  double k_step = 0.0;

  long trials = 1;
  double tol = 1e-10;
  int max_iter = 600;
  bool lambda2 = true;
  bool entropy = true;
  Mode mode = Mode::kAuto;

  std::uint64_t seed = 0;
  std::string seed_source;    // "flag", "env" or "random"
  unsigned threads = 1;
  std::string output = "-";
  Format format = Format::kCsv;

  /// The resolved configuration, including derived values.
  nlohmann::json to_json() const;
  /// A command line that reproduces this run.
  std::string rerun_command() const;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParseResult {
  std::optional<ExperimentConfig> config;  // empty: exit with exit_code
  int exit_code = 0;
};

/// Parses and validates argv. Help and --version print to `out` and return
/// exit code 0; errors print one line to `err` and return exit code 2.
ParseResult parse_config(int argc, const char* const* argv, std::ostream& out,
                         std::ostream& err);

/// Throws ConfigError on invalid combinations; fills derived fields.
void validate(ExperimentConfig& config);

}  // namespace rqc::cli

#endif  // RQC_CLI_CONFIG_HPP
