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

#ifndef RQC_LINALG_HPP
#define RQC_LINALG_HPP

#include <complex>

#include <Eigen/Dense>

namespace rqc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Row-stacking vectorization: vec(X)[a * cols + b] = X(a, b). With this
// convention vec(A X B^dagger) = (A (x) conj(B)) vec(X).

inline Vector vec_rows(const Matrix& x) {
  Vector v(x.size());
  for (Index a = 0; a < x.rows(); ++a) {
    for (Index b = 0; b < x.cols(); ++b) v(a * x.cols() + b) = x(a, b);
  }
  return v;
}

inline Matrix unvec_rows(const Vector& v, Index rows, Index cols) {
  Matrix x(rows, cols);
  for (Index a = 0; a < rows; ++a) {
    for (Index b = 0; b < cols; ++b) x(a, b) = v(a * cols + b);
  }
  return x;
}

/// Kronecker product with row index (a, i) -> a * rows(B) + i.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Matrix hermitian_part(const Matrix& x) {
  return (x + x.adjoint()) / 2.0;
}

}  // namespace rqc

#endif  // RQC_LINALG_HPP
