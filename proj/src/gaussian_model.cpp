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

#include "rqc/gaussian_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "rqc/channel.hpp"
#include "rqc/krylov.hpp"
#include "rqc/stats.hpp"
#include "rqc/superoperator.hpp"

namespace rqc {
namespace {

// |Y| = (Y^dagger Y)^{1/2} and its eigenvalues (the singular values of Y).
struct Modulus {
  Matrix abs;
  RealVector singular;
};

Modulus modulus(const Matrix& y, bool need_matrix) {
  const Eigen::SelfAdjointEigenSolver<Matrix> es(
      y.adjoint() * y,
      need_matrix ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  Modulus out;
  out.singular = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  if (need_matrix) {
    out.abs = es.eigenvectors() * out.singular.cast<Complex>().asDiagonal() *
              es.eigenvectors().adjoint();
  }
  return out;
}

}  // namespace

double trace_norm(const Matrix& y) { return modulus(y, false).singular.sum(); }

TwirlDraw twirl_draw(Index m, Index n, Rng& rng) {
  if (n < 1 || m < n) throw std::invalid_argument("twirl_draw: need M >= N >= 1");
  const Matrix y = sample_ginibre(m, n, 1.0 / static_cast<double>(m), rng);
  const double one_norm = trace_norm(y);
  return {y.squaredNorm() / static_cast<double>(n), one_norm * one_norm};
}

TwirlEstimate estimate_twirl_structure(Index m, Index n, long trials,
                                       std::uint64_t seed,
                                       const TwirlOptions& options) {
  if (n < 1 || m < n) {
    throw std::invalid_argument("estimate_twirl_structure: need M >= N >= 1");
  }
  if (trials < 1) {
    throw std::invalid_argument("estimate_twirl_structure: trials >= 1");
  }
  const bool accumulate = n <= options.flatness_max_n;
  Matrix h;
  if (accumulate) h = Matrix::Zero(n * n, n * n);
  RunningStats diag;
  RunningStats squared_trace_norm;
  for (long t = 0; t < trials; ++t) {
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(t));
    const Matrix y = sample_ginibre(m, n, 1.0 / static_cast<double>(m), rng);
    const Modulus mod = modulus(y, accumulate);
    // tr((|Y| (x) conj|Y|) omega_N) = tr(|Y|^2) / N = tr(Y^dagger Y) / N.
    diag.add(y.squaredNorm() / static_cast<double>(n));
    const double one_norm = mod.singular.sum();
    squared_trace_norm.add(one_norm * one_norm);
    if (accumulate) h += kron(mod.abs, mod.abs.conjugate());
  }
  TwirlEstimate out;
  out.m = m;
  out.n = n;
  out.trials = trials;
  out.diag_overlap = diag.mean();
  out.diag_overlap_se = diag.standard_error();
  const double denom = static_cast<double>(n * n) - 1.0;
  if (denom > 0.0) {
    out.chi_hat = (squared_trace_norm.mean() - 1.0) / denom;
    out.chi_hat_se = squared_trace_norm.standard_error() / denom;
  }
  if (accumulate && n > 1) {
    h /= static_cast<double>(trials);
    const Matrix p = Matrix::Identity(n * n, n * n) - max_entangled_projector(n);
    const Eigen::SelfAdjointEigenSolver<Matrix> es(p * h * p);
    const Vector omega = max_entangled_vector(n);
    // Drop the eigenvector aligned with Omega (eigenvalue ~ 0).
    Index drop = 0;
    double best = -1.0;
    for (Index i = 0; i < es.eigenvalues().size(); ++i) {
      const double overlap = std::abs(omega.dot(es.eigenvectors().col(i)));
      if (overlap > best) {
        best = overlap;
        drop = i;
      }
    }
    RunningStats spectrum;
    for (Index i = 0; i < es.eigenvalues().size(); ++i) {
      if (i != drop) spectrum.add(es.eigenvalues()(i));
    }
    out.offdiag_flatness = (spectrum.max() - spectrum.min()) / spectrum.mean();
  }
  return out;
}

double kron_sum_norm(const std::vector<Matrix>& ys,
                     const std::vector<Matrix>& zs) {
  if (ys.empty() || ys.size() != zs.size()) {
    throw std::invalid_argument("kron_sum_norm: families must match");
  }
  const Index ny = ys.front().rows();
  const Index dy = ys.front().cols();
  const Index nz = zs.front().rows();
  const Index dz = zs.front().cols();
  if (ny * nz * dy * dz <= 65536) {
    Matrix x = Matrix::Zero(ny * nz, dy * dz);
    for (std::size_t i = 0; i < ys.size(); ++i) x += kron(ys[i], zs[i]);
    const Eigen::BDCSVD<Matrix> svd(x);
    return svd.singularValues()(0);
  }
  // (Y (x) Z) vec(W) = vec(Y W Z^T) for row-stacked vec, W of shape dy x dz.
  const LinearMap gram = [&](const Vector& v) {
    const Matrix w = unvec_rows(v, dy, dz);
    Matrix image = Matrix::Zero(ny, nz);
    for (std::size_t i = 0; i < ys.size(); ++i) {
      image.noalias() += ys[i] * w * zs[i].transpose();
    }
    Matrix back = Matrix::Zero(dy, dz);
    for (std::size_t i = 0; i < ys.size(); ++i) {
      back.noalias() += ys[i].adjoint() * image * zs[i].conjugate();
    }
    return vec_rows(back);
  };
  Rng rng(0x5eedULL);
  const VectorSource source = [&] {
    return vec_rows(sample_ginibre(dy, dz, 1.0, rng));
  };
  LanczosOptions lo;
  lo.count = 1;
  lo.tol = 1e-10;
  const LanczosResult r = lanczos_largest(gram, source, dy * dz, lo);
  return std::sqrt(std::max(r.values(0), 0.0));
}

double gaussian_model_norm_draw(Index n, Index d, Index k, Rng& rng) {
  if (n < 1 || d < 1 || k < 1) {
    throw std::invalid_argument("gaussian_model_norm: dimensions >= 1");
  }
  const double variance = 1.0 / static_cast<double>(n * k);
  std::vector<Matrix> ys;
  std::vector<Matrix> zs;
  for (Index i = 0; i < k; ++i) ys.push_back(sample_ginibre(n, d, variance, rng));
  for (Index i = 0; i < k; ++i) zs.push_back(sample_ginibre(n, d, variance, rng));
  return kron_sum_norm(ys, zs);
}

std::vector<double> gaussian_model_norm(Index n, Index d, Index k, long trials,
                                        std::uint64_t seed) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(trials, 0L)));
  for (long t = 0; t < trials; ++t) {
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(t));
    out.push_back(gaussian_model_norm_draw(n, d, k, rng));
  }
  return out;
}

}  // namespace rqc
