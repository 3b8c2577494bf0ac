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

#include "rqc/krylov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

namespace rqc {
namespace {

constexpr double kBreakdown = 1e-12;

// Two passes of classical Gram-Schmidt against the first `m` columns of q.
// Returns the accumulated projection coefficients. With `real` set the
// coefficients are projected to R, which keeps the iteration inside a real
// form of the space (e.g. Hermitian matrices) without drift.
Vector orthogonalize(const Matrix& q, Index m, Vector& w, bool real) {
  Vector h = Vector::Zero(m);
  if (m == 0) return h;
  for (int pass = 0; pass < 2; ++pass) {
    Vector c = q.leftCols(m).adjoint() * w;
    if (real) c = c.real().cast<Complex>();
    w.noalias() -= q.leftCols(m) * c;
    h += c;
  }
  return h;
}

// Fresh unit vector orthogonal to the first m columns, or an empty vector if
// the source only yields vectors inside the current span.
Vector fresh_direction(const Matrix& q, Index m, const VectorSource& source,
                       bool real) {
  for (int attempt = 0; attempt < 3; ++attempt) {
    Vector v = source();
    const double before = v.norm();
    orthogonalize(q, m, v, real);
    const double after = v.norm();
    if (after > 1e-8 * before) return v / after;
  }
  return Vector();
}

}  // namespace

LanczosResult lanczos_largest(const LinearMap& op, const VectorSource& source,
                              Index subspace_dim,
                              const LanczosOptions& options) {
  if (options.count < 1 || options.count > subspace_dim) {
    throw std::invalid_argument("lanczos_largest: count out of range");
  }
  const Index max_m = std::min<Index>(options.max_iter, subspace_dim);
  Vector start = source();
  const Index dim = start.size();
  Matrix q(dim, max_m + 1);
  std::vector<double> alpha;
  std::vector<double> beta;  // beta[j] couples q_j and q_{j+1}; 0 on restart
  q.col(0) = start / start.norm();

  LanczosResult result;
  double last_beta = 0.0;
  Index m = 0;
  bool exhausted = false;
  Index next_check = std::max(options.count, options.check_every);
  while (true) {
    Vector w = op(q.col(m));
    const double a = std::real(q.col(m).dot(w));
    alpha.push_back(a);
    orthogonalize(q, m + 1, w, options.real_coefficients);
    ++m;
    last_beta = w.norm();
    const double scale = std::max(std::abs(a), 1.0);
    if (m == max_m) {
      exhausted = (m == subspace_dim);
    } else if (last_beta <= kBreakdown * scale) {
      Vector next = fresh_direction(q, m, source, options.real_coefficients);
      if (next.size() == 0) {
        exhausted = true;
      } else {
        beta.push_back(0.0);
        q.col(m) = next;
      }
    } else {
      beta.push_back(last_beta);
      q.col(m) = w / last_beta;
    }

    const bool stop = exhausted || m == max_m;
    if (!stop && m < next_check) continue;
    next_check = m + options.check_every;
    if (m < options.count) {
      if (stop) break;
      continue;
    }

    RealVector diag(m);
    RealVector sub(std::max<Index>(m - 1, 0));
    for (Index i = 0; i < m; ++i) diag(i) = alpha[static_cast<std::size_t>(i)];
    for (Index i = 0; i + 1 < m; ++i) sub(i) = beta[static_cast<std::size_t>(i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const RealVector& theta = tri.eigenvalues();
    const Eigen::MatrixXd& s = tri.eigenvectors();
    const double top = std::max(std::abs(theta(m - 1)), 1e-300);

    const int c = options.count;
    result.values.resize(c);
    result.residuals.resize(c);
    bool all_small = true;
    for (int j = 0; j < c; ++j) {
      const Index idx = m - 1 - j;
      result.values(j) = theta(idx);
      result.residuals(j) = exhausted ? 0.0 : std::abs(last_beta * s(m - 1, idx));
      if (result.residuals(j) > options.tol * top) all_small = false;
    }
    if (all_small || stop) {
      result.vectors.resize(dim, c);
      for (int j = 0; j < c; ++j) {
        const RealVector y = s.col(m - 1 - j);
        result.vectors.col(j) = q.leftCols(m) * y.cast<Complex>();
      }
      result.iterations = static_cast<int>(m);
      result.converged = all_small || exhausted;
      break;
    }
  }
  return result;
}

ArnoldiResult arnoldi_dominant(const LinearMap& op, const VectorSource& source,
                               Index subspace_dim,
                               const ArnoldiOptions& options) {
  if (subspace_dim < 1) {
    throw std::invalid_argument("arnoldi_dominant: empty subspace");
  }
  const Index max_m = std::min<Index>(options.max_iter, subspace_dim);
  Vector start = source();
  const Index dim = start.size();
  Matrix v(dim, max_m + 1);
  Matrix h = Matrix::Zero(max_m + 1, max_m);
  v.col(0) = start / start.norm();

  ArnoldiResult result;
  Index m = 0;
  double last_h = 0.0;
  bool exhausted = false;
  Index next_check = options.check_every;
  while (true) {
    Vector w = op(v.col(m));
    const Vector coeffs =
        orthogonalize(v, m + 1, w, options.real_coefficients);
    h.col(m).head(m + 1) = coeffs;
    last_h = w.norm();
    ++m;
    const double scale = std::max(coeffs.norm(), 1e-300);
    if (m == max_m) {
      exhausted = (m == subspace_dim);
      h(m, m - 1) = last_h;
    } else if (last_h <= kBreakdown * scale) {
      Vector next = fresh_direction(v, m, source, options.real_coefficients);
      if (next.size() == 0) {
        exhausted = true;
      } else {
        v.col(m) = next;
      }
    } else {
      h(m, m - 1) = last_h;
      v.col(m) = w / last_h;
    }

    const bool stop = exhausted || m == max_m;
    if (!stop && m < next_check) continue;
    // Hessenberg eigensolves cost O(m^3): space the checks geometrically.
    next_check = std::max<Index>(m + options.check_every, m + m / 4);

    Vector mu;
    Matrix vecs;
    if (options.real_coefficients) {
      const Eigen::EigenSolver<Eigen::MatrixXd> es(
          h.topLeftCorner(m, m).real(), true);
      mu = es.eigenvalues();
      vecs = es.eigenvectors();
    } else {
      const Eigen::ComplexEigenSolver<Matrix> es(h.topLeftCorner(m, m), true);
      mu = es.eigenvalues();
      vecs = es.eigenvectors();
    }
    Index best = 0;
    for (Index i = 1; i < m; ++i) {
      if (std::abs(mu(i)) > std::abs(mu(best))) best = i;
    }
    const Vector y = vecs.col(best).normalized();
    const double mag = std::abs(mu(best));
    result.ritz_values = mu;
    result.dominant_abs = mag;
    result.residual = exhausted ? 0.0 : std::abs(last_h * y(m - 1));
    result.iterations = static_cast<int>(m);
    result.exhausted = exhausted;
    result.converged =
        exhausted || result.residual <= options.tol * std::max(mag, 1e-300);
    if (result.converged || stop) break;
  }
  return result;
}

}  // namespace rqc
