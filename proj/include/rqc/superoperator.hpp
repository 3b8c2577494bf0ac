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

#ifndef RQC_SUPEROPERATOR_HPP
#define RQC_SUPEROPERATOR_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rqc/linalg.hpp"

namespace rqc {

enum class Representation { kDense, kMatrixFree };

/// Dense materialization is refused above this many entries (n^2 d^2).
inline constexpr std::size_t kDefaultDenseEntryLimit = 100'000'000;

/// The super-operator F = sum_i A_i (x) conj(A_i) : C^{d^2} -> C^{n^2} of the
/// channel Phi(X) = sum_i A_i X A_i^dagger, acting on row-stacked vectors so
/// that F vec(X) = vec(Phi(X)).
///
/// In matrix-free mode F is never formed; products go through the stacked
/// Kraus blocks [A_1; ...; A_k] (kn x d), which costs two GEMMs of size
/// n k d^2 per application. The matrix-free applies keep per-thread scratch
/// buffers, so concurrent calls from different threads are safe.
class SuperOperator {
 public:
  SuperOperator(std::vector<Matrix> kraus, Representation representation,
                std::size_t dense_entry_limit = kDefaultDenseEntryLimit);

  Index input_dim() const { return d_; }
  Index output_dim() const { return n_; }
  Index kraus_rank() const { return static_cast<Index>(kraus_.size()); }
  Representation representation() const { return representation_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }

  /// Phi(X) and the dual Phi^dagger(Y) = sum_i A_i^dagger Y A_i.
  Matrix channel(const Matrix& x) const;
  Matrix dual(const Matrix& y) const;
  /// Same maps for Hermitian arguments; only the lower triangle of the
  /// output is computed and then mirrored.
  Matrix channel_hermitian(const Matrix& x) const;
  Matrix dual_hermitian(const Matrix& y) const;

  /// F v and F^dagger w on row-stacked vectors.
  Vector apply(const Vector& v) const;
  Vector apply_adjoint(const Vector& w) const;

  /// The dense n^2 x d^2 matrix. Throws std::logic_error in matrix-free mode.
  const Matrix& dense() const;
  /// Builds sum_i A_i (x) conj(A_i) whatever the representation. Throws
  /// std::length_error above the entry limit.
  Matrix materialize() const;

 private:
  std::vector<Matrix> kraus_;
  Representation representation_;
  std::size_t dense_entry_limit_;
  Index n_;
  Index d_;
  Eigen::Map<const Matrix> horizontal() const;

  Matrix vertical_;  // [A_1; ...; A_k]
  std::optional<Matrix> dense_;
};

/// Picks kDense when n^2 d^2 is within the limit, else kMatrixFree.
Representation auto_representation(Index n, Index d,
                                   std::size_t dense_entry_limit =
                                       kDefaultDenseEntryLimit);

/// Omega_d = d^{-1/2} sum_i e_i (x) e_i, i.e. vec(I_d) / sqrt(d).
Vector max_entangled_vector(Index d);
/// omega_d = Omega_d Omega_d^dagger.
Matrix max_entangled_projector(Index d);

/// C = [Phi (x) id](omega_d), an (n d) x (n d) matrix with row index
/// (a, c) -> a * d + c.
Matrix choi_matrix(const std::vector<Matrix>& kraus);

/// Realignment R[(a, b), (c, e)] = d * C[(a, c), (b, e)]. The factor d undoes
/// the normalization of omega_d, so realign(choi_matrix(K)) equals F.
Matrix realign_choi(const Matrix& choi, Index n, Index d);

}  // namespace rqc

#endif  // RQC_SUPEROPERATOR_HPP
