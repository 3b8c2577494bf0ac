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

#ifndef RQC_GAUSSIAN_MODEL_HPP
#define RQC_GAUSSIAN_MODEL_HPP

#include <optional>
#include <vector>

#include "rqc/linalg.hpp"
#include "rqc/random.hpp"

namespace rqc {

struct TwirlOptions {
  // H = E |Y| (x) conj|Y| is only accumulated (N^2 x N^2) up to this N.
  Index flatness_max_n = 16;
};

struct TwirlEstimate {
  Index m = 0;
  Index n = 0;
  long trials = 0;
  double diag_overlap = 0.0;     // tr(H omega_N), expected 1
  double diag_overlap_se = 0.0;
  double chi_hat = 0.0;          // (E ||Y||_1^2 - 1) / (N^2 - 1)
  double chi_hat_se = 0.0;
  std::optional<double> offdiag_flatness;  // (max - min) / mean on omega^perp
};

/// One Ginibre(M, N; 1/M) draw reduced to the two scalars the estimate
/// averages: tr(Y^dagger Y) / N and ||Y||_1^2.
struct TwirlDraw {
  double diag_overlap = 0.0;
  double trace_norm_sq = 0.0;
};
TwirlDraw twirl_draw(Index m, Index n, Rng& rng);

/// Monte Carlo estimate of the twirled operator E(|Y| (x) |conj Y|) for
/// Y ~ Ginibre(M, N; 1/M), M >= N. Trial t draws from the t-th substream of
/// `seed`, so results do not depend on how trials are scheduled.
TwirlEstimate estimate_twirl_structure(Index m, Index n, long trials,
                                       std::uint64_t seed,
                                       const TwirlOptions& options = {});

/// ||Y||_1 for one matrix: sum of singular values.
double trace_norm(const Matrix& y);

/// ||sum_i Y_i (x) Z_i||_inf for given families (same shapes).
double kron_sum_norm(const std::vector<Matrix>& ys,
                     const std::vector<Matrix>& zs);

/// One draw of ||sum_i Y_i (x) Z_i||_inf with independent
/// Y_i, Z_i ~ Ginibre(n, d; 1/(n k)).
double gaussian_model_norm_draw(Index n, Index d, Index k, Rng& rng);

/// `trials` draws, trial t on substream t of `seed`.
std::vector<double> gaussian_model_norm(Index n, Index d, Index k, long trials,
                                        std::uint64_t seed);

}  // namespace rqc

#endif  // RQC_GAUSSIAN_MODEL_HPP
