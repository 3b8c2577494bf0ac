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

#ifndef RQC_CHANNEL_HPP
#define RQC_CHANNEL_HPP

#include <vector>

#include "rqc/linalg.hpp"
#include "rqc/random.hpp"

namespace rqc {

/// M x N matrix of i.i.d. centered complex Gaussians with E|Y_ij|^2 = variance.
Matrix sample_ginibre(Index rows, Index cols, double variance, Rng& rng);

/// Haar-distributed isometry: the first `cols` columns of a Haar unitary.
/// Obtained from the QR factorization of a Ginibre matrix with the columns
/// of Q rephased so that R has a positive diagonal.
Matrix sample_haar_isometry(Index rows, Index cols, Rng& rng);

/// Splits an (n k) x d isometry into k blocks A_i (n x d) such that
/// V = sum_i A_i (x) e_i, with row index (a, i) -> a * k + i.
std::vector<Matrix> kraus_blocks(const Matrix& v, Index n, Index k);

/// Inverse of kraus_blocks.
Matrix reassemble_isometry(const std::vector<Matrix>& kraus);

/// ||V^dagger V - I||_F.
double isometry_residual(const Matrix& v);
/// ||sum_i A_i^dagger A_i - I||_F.
double trace_preservation_residual(const std::vector<Matrix>& kraus);

/// One draw of the channel M_d -> M_n, X -> Tr_k(V X V^dagger).
struct ChannelSample {
  Index n = 0;
  Index d = 0;
  Index k = 0;
  Matrix isometry;
  std::vector<Matrix> kraus;

  /// Throws std::invalid_argument unless all dimensions are positive and
  /// d <= n k.
  static ChannelSample draw(Index n, Index d, Index k, Rng& rng);
  static ChannelSample from_isometry(Matrix v, Index n, Index k);
};

/// Channel application sum_i A_i X A_i^dagger.
Matrix apply_kraus(const std::vector<Matrix>& kraus, const Matrix& x);

/// Overlap f = ||F Omega_d||^2 = ||Phi(I_d)||_F^2 / d.
double overlap_f(const std::vector<Matrix>& kraus);
inline double overlap_f(const ChannelSample& sample) {
  return overlap_f(sample.kraus);
}

}  // namespace rqc

#endif  // RQC_CHANNEL_HPP
