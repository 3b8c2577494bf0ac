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

#include <cmath>
#include <stdexcept>

#include "rqc/channel.hpp"

namespace rqc {

Matrix sample_ginibre(Index rows, Index cols, double variance, Rng& rng) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("sample_ginibre: dimensions must be positive");
  }
  if (!(variance > 0.0)) {
    throw std::invalid_argument("sample_ginibre: variance must be positive");
  }
  std::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
  Matrix y(rows, cols);
  // Column-major fill keeps the draw order independent of Eigen internals.
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      y(i, j) = Complex(re, im);
    }
  }
  return y;
}

Matrix sample_haar_isometry(Index rows, Index cols, Rng& rng) {
  if (cols < 1 || rows < cols) {
    throw std::invalid_argument(
        "sample_haar_isometry: need rows >= cols >= 1");
  }
  const Matrix z = sample_ginibre(rows, cols, 1.0, rng);
  const Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  const Matrix& r = qr.matrixQR();
  for (Index j = 0; j < cols; ++j) {
    const double modulus = std::abs(r(j, j));
    if (modulus > 0.0) q.col(j) *= r(j, j) / modulus;
  }
  return q;
}

std::vector<Matrix> kraus_blocks(const Matrix& v, Index n, Index k) {
  if (n < 1 || k < 1 || v.rows() != n * k) {
    throw std::invalid_argument(
        "kraus_blocks: isometry must have n k rows");
  }
  std::vector<Matrix> blocks(static_cast<std::size_t>(k),
                             Matrix(n, v.cols()));
  for (Index a = 0; a < n; ++a) {
    for (Index i = 0; i < k; ++i) {
      blocks[static_cast<std::size_t>(i)].row(a) = v.row(a * k + i);
    }
  }
  return blocks;
}

Matrix reassemble_isometry(const std::vector<Matrix>& kraus) {
  if (kraus.empty()) {
    throw std::invalid_argument("reassemble_isometry: empty Kraus family");
  }
  const Index k = static_cast<Index>(kraus.size());
  const Index n = kraus.front().rows();
  const Index d = kraus.front().cols();
  Matrix v(n * k, d);
  for (Index i = 0; i < k; ++i) {
    const Matrix& a = kraus[static_cast<std::size_t>(i)];
    if (a.rows() != n || a.cols() != d) {
      throw std::invalid_argument("reassemble_isometry: block shape mismatch");
    }
    for (Index row = 0; row < n; ++row) v.row(row * k + i) = a.row(row);
  }
  return v;
}

double isometry_residual(const Matrix& v) {
  return (v.adjoint() * v - Matrix::Identity(v.cols(), v.cols())).norm();
}

double trace_preservation_residual(const std::vector<Matrix>& kraus) {
  if (kraus.empty()) return 0.0;
  const Index d = kraus.front().cols();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& a : kraus) sum.noalias() += a.adjoint() * a;
  return (sum - Matrix::Identity(d, d)).norm();
}

ChannelSample ChannelSample::draw(Index n, Index d, Index k, Rng& rng) {
  if (n < 1 || d < 1 || k < 1) {
    throw std::invalid_argument("ChannelSample: dimensions must be positive");
  }
  if (d > n * k) {
    throw std::invalid_argument("ChannelSample: d > n k, no isometry exists");
  }
  return from_isometry(sample_haar_isometry(n * k, d, rng), n, k);
}

ChannelSample ChannelSample::from_isometry(Matrix v, Index n, Index k) {
  ChannelSample sample;
  sample.kraus = kraus_blocks(v, n, k);
  sample.n = n;
  sample.d = v.cols();
  sample.k = k;
  sample.isometry = std::move(v);
  return sample;
}

Matrix apply_kraus(const std::vector<Matrix>& kraus, const Matrix& x) {
  if (kraus.empty()) throw std::invalid_argument("apply_kraus: empty family");
  const Index n = kraus.front().rows();
  Matrix out = Matrix::Zero(n, n);
  for (const auto& a : kraus) out.noalias() += a * x * a.adjoint();
  return out;
}

double overlap_f(const std::vector<Matrix>& kraus) {
  if (kraus.empty()) throw std::invalid_argument("overlap_f: empty family");
  const Index n = kraus.front().rows();
  const Index d = kraus.front().cols();
  Matrix image = Matrix::Zero(n, n);
  for (const auto& a : kraus) image.noalias() += a * a.adjoint();
  return image.squaredNorm() / static_cast<double>(d);
}

}  // namespace rqc
