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

#ifndef RQC_CLI_EXPERIMENTS_HPP
#define RQC_CLI_EXPERIMENTS_HPP

#include <iosfwd>

#include "rqc/cli/config.hpp"
#include "rqc/cli/report.hpp"

namespace rqc::cli {

/// Runs the experiment described by a validated config. Trial t always
/// draws from substream t of the master seed and rows are assembled in
/// trial order, so the table does not depend on config.threads. A failing
/// trial stops the run: rows before it are kept and the report is marked
/// truncated, with the trial index in the error message.
RunReport run_experiment(const ExperimentConfig& config);

/// parse -> run -> render -> write. Returns the process exit code:
/// 0 on success, 1 if a trial failed or an invariant was violated, 2 on a
/// usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace rqc::cli

#endif  // RQC_CLI_EXPERIMENTS_HPP
