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

#include "rqc/superoperator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rqc {
namespace {

void mirror_lower(Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    m(j, j) = Complex(m(j, j).real(), 0.0);
    for (Index i = j + 1; i < m.rows(); ++i) m(j, i) = std::conj(m(i, j));
  }
}

}  // namespace

SuperOperator::SuperOperator(std::vector<Matrix> kraus,
                             Representation representation,
                             std::size_t dense_entry_limit)
    : kraus_(std::move(kraus)),
      representation_(representation),
      dense_entry_limit_(dense_entry_limit) {
  if (kraus_.empty()) {
    throw std::invalid_argument("SuperOperator: empty Kraus family");
  }
  n_ = kraus_.front().rows();
  d_ = kraus_.front().cols();
  for (const auto& a : kraus_) {
    if (a.rows() != n_ || a.cols() != d_) {
      throw std::invalid_argument(
          "SuperOperator: all Kraus operators must share one shape");
    }
  }
  const Index k = kraus_rank();
  vertical_.resize(k * n_, d_);
  for (Index i = 0; i < k; ++i) {
    vertical_.middleRows(i * n_, n_) = kraus_[static_cast<std::size_t>(i)];
  }
  if (representation_ == Representation::kDense) dense_ = materialize();
}

// Memory of the column-major (k n) x d stack [A_1; ...; A_k], read as an
// n x (d k) matrix, has column c * k + i equal to column c of A_i. Products
// against that view sum over (c, i) exactly like [A_1 ... A_k], so both
// stackings share one buffer and no block copies are needed.
Eigen::Map<const Matrix> SuperOperator::horizontal() const {
  return Eigen::Map<const Matrix>(vertical_.data(), n_, d_ * kraus_rank());
}

Matrix SuperOperator::channel(const Matrix& x) const {
  thread_local Matrix stacked;
  stacked.resize(vertical_.rows(), d_);
  stacked.noalias() = vertical_ * x;  // rows i * n + a hold A_i X
  const Eigen::Map<const Matrix> side(stacked.data(), n_, d_ * kraus_rank());
  Matrix out(n_, n_);
  out.noalias() = side * horizontal().adjoint();
  return out;
}

Matrix SuperOperator::dual(const Matrix& y) const {
  thread_local Matrix side;
  side.resize(n_, d_ * kraus_rank());
  side.noalias() = y * horizontal();
  const Eigen::Map<const Matrix> stacked(side.data(), vertical_.rows(), d_);
  Matrix out(d_, d_);
  out.noalias() = vertical_.adjoint() * stacked;
  return out;
}

Matrix SuperOperator::channel_hermitian(const Matrix& x) const {
  thread_local Matrix stacked;
  stacked.resize(vertical_.rows(), d_);
  stacked.noalias() = vertical_ * x;
  const Eigen::Map<const Matrix> side(stacked.data(), n_, d_ * kraus_rank());
  Matrix out = Matrix::Zero(n_, n_);
  out.triangularView<Eigen::Lower>() = side * horizontal().adjoint();
  mirror_lower(out);
  return out;
}

Matrix SuperOperator::dual_hermitian(const Matrix& y) const {
  thread_local Matrix side;
  side.resize(n_, d_ * kraus_rank());
  side.noalias() = y * horizontal();
  const Eigen::Map<const Matrix> stacked(side.data(), vertical_.rows(), d_);
  Matrix out = Matrix::Zero(d_, d_);
  out.triangularView<Eigen::Lower>() = vertical_.adjoint() * stacked;
  mirror_lower(out);
  return out;
}

Vector SuperOperator::apply(const Vector& v) const {
  if (v.size() != d_ * d_) {
    throw std::invalid_argument("SuperOperator::apply: expected length d^2");
  }
  if (dense_) return *dense_ * v;
  return vec_rows(channel(unvec_rows(v, d_, d_)));
}

Vector SuperOperator::apply_adjoint(const Vector& w) const {
  if (w.size() != n_ * n_) {
    throw std::invalid_argument(
        "SuperOperator::apply_adjoint: expected length n^2");
  }
  if (dense_) return dense_->adjoint() * w;
  return vec_rows(dual(unvec_rows(w, n_, n_)));
}

const Matrix& SuperOperator::dense() const {
  if (!dense_) {
    throw std::logic_error("SuperOperator: dense matrix requested in "
                           "matrix-free mode");
  }
  return *dense_;
}

Matrix SuperOperator::materialize() const {
  const auto entries = static_cast<std::size_t>(n_ * n_) *
                       static_cast<std::size_t>(d_ * d_);
  if (entries > dense_entry_limit_) {
    throw std::length_error("SuperOperator: dense form has " +
                            std::to_string(entries) +
                            " entries, above the configured limit");
  }
  // One (nd) x k by k x (nd) product followed by an index shuffle is far
  // cheaper than summing k Kronecker products.
  return realign_choi(choi_matrix(kraus_), n_, d_);
}

Representation auto_representation(Index n, Index d,
                                   std::size_t dense_entry_limit) {
  const auto entries =
      static_cast<std::size_t>(n * n) * static_cast<std::size_t>(d * d);
  return entries <= dense_entry_limit ? Representation::kDense
                                      : Representation::kMatrixFree;
}

Vector max_entangled_vector(Index d) {
  if (d < 1) throw std::invalid_argument("max_entangled_vector: d >= 1");
  return vec_rows(Matrix::Identity(d, d)) / std::sqrt(static_cast<double>(d));
}

Matrix max_entangled_projector(Index d) {
  const Vector omega = max_entangled_vector(d);
  return omega * omega.adjoint();
}

Matrix choi_matrix(const std::vector<Matrix>& kraus) {
  if (kraus.empty()) throw std::invalid_argument("choi_matrix: empty family");
  const Index n = kraus.front().rows();
  const Index d = kraus.front().cols();
  // C = d^-1 sum_i vec(A_i) vec(A_i)^dagger with vec(A)[a * d + c] = A(a, c).
  Matrix stacked(n * d, static_cast<Index>(kraus.size()));
  for (std::size_t i = 0; i < kraus.size(); ++i) {
    stacked.col(static_cast<Index>(i)) = vec_rows(kraus[i]);
  }
  return stacked * stacked.adjoint() / static_cast<double>(d);
}

Matrix realign_choi(const Matrix& choi, Index n, Index d) {
  if (choi.rows() != n * d || choi.cols() != n * d) {
    throw std::invalid_argument("realign_choi: expected an (n d) x (n d) matrix");
  }
  Matrix out(n * n, d * d);
  const double scale = static_cast<double>(d);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < d; ++c) {
        for (Index e = 0; e < d; ++e) {
          out(a * n + b, c * d + e) = scale * choi(a * d + c, b * d + e);
        }
      }
    }
  }
  return out;
}

}  // namespace rqc
