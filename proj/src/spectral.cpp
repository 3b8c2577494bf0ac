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

#include "rqc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "rqc/krylov.hpp"

namespace rqc {
namespace {

bool use_dense_solver(const SuperOperator& op, const SpectralOptions& options) {
  const Index n2 = op.output_dim() * op.output_dim();
  const Index d2 = op.input_dim() * op.input_dim();
  return op.representation() == Representation::kDense &&
         std::max(n2, d2) <= options.dense_solver_limit;
}

Matrix random_hermitian(Index d, Rng& rng) {
  return hermitian_part(sample_ginibre(d, d, 1.0, rng));
}

// F^dagger F on vec(X) for Hermitian X.
Vector gram_apply(const SuperOperator& op, const Vector& v) {
  const Index d = op.input_dim();
  if (op.representation() == Representation::kDense) {
    return op.dense().adjoint() * (op.dense() * v);
  }
  const Matrix x = hermitian_part(unvec_rows(v, d, d));
  return vec_rows(op.dual_hermitian(op.channel_hermitian(x)));
}

// x - Omega <Omega, x> with Omega = vec(I)/sqrt(d): removes the trace part.
Vector deflate_identity(const Vector& v, Index d) {
  Vector out = v;
  Complex tr = 0.0;
  for (Index i = 0; i < d; ++i) tr += v(i * d + i);
  for (Index i = 0; i < d; ++i) out(i * d + i) -= tr / static_cast<double>(d);
  return out;
}

LanczosOptions lanczos_options(const SpectralOptions& options, int count) {
  LanczosOptions lo;
  lo.count = count;
  lo.tol = options.tol;
  lo.max_iter = options.max_iter;
  lo.real_coefficients = true;
  return lo;
}

}  // namespace

SingularValues top_singular_values(const SuperOperator& op,
                                   const SpectralOptions& options, Rng& rng,
                                   int count) {
  if (count < 1 || count > 2) {
    throw std::invalid_argument("top_singular_values: count must be 1 or 2");
  }
  SingularValues out;
  const Index d = op.input_dim();
  if (use_dense_solver(op, options)) {
    const Eigen::BDCSVD<Matrix> svd(op.dense());
    const RealVector& s = svd.singularValues();
    out.s1 = s(0);
    if (count == 2) out.s2 = s.size() > 1 ? s(1) : 0.0;
  } else {
    if (d * d < count) {
      throw std::invalid_argument("top_singular_values: need d^2 >= count");
    }
    const LinearMap apply = [&](const Vector& v) { return gram_apply(op, v); };
    const VectorSource source = [&] { return vec_rows(random_hermitian(d, rng)); };
    const LanczosResult r =
        lanczos_largest(apply, source, d * d, lanczos_options(options, count));
    out.s1 = std::sqrt(std::max(r.values(0), 0.0));
    if (count == 2) out.s2 = std::sqrt(std::max(r.values(1), 0.0));
    out.iterations = r.iterations;
    out.residual = r.residuals.maxCoeff();
    out.converged = r.converged;
  }
  if (out.s2) out.gap_below_resolution = out.s1 - *out.s2 < 10.0 * options.tol;
  return out;
}

NormEstimate restricted_norm(const SuperOperator& op,
                             const SpectralOptions& options, Rng& rng) {
  NormEstimate out;
  const Index d = op.input_dim();
  if (use_dense_solver(op, options)) {
    const Matrix deflated =
        op.dense() - op.dense() * max_entangled_projector(d);
    const Eigen::BDCSVD<Matrix> svd(deflated);
    out.value = svd.singularValues()(0);
    return out;
  }
  if (d < 2) {
    // The complement of Omega is {0} when d = 1.
    return out;
  }
  const LinearMap apply = [&](const Vector& v) {
    return deflate_identity(gram_apply(op, deflate_identity(v, d)), d);
  };
  const VectorSource source = [&] {
    return deflate_identity(vec_rows(random_hermitian(d, rng)), d);
  };
  const LanczosResult r =
      lanczos_largest(apply, source, d * d - 1, lanczos_options(options, 1));
  out.value = std::sqrt(std::max(r.values(0), 0.0));
  out.iterations = r.iterations;
  out.residual = r.residuals(0);
  out.converged = r.converged;
  return out;
}

SecondEigenvalue second_eigenvalue_abs(const SuperOperator& op,
                                       const SpectralOptions& options,
                                       Rng& rng) {
  const Index n = op.output_dim();
  if (op.input_dim() != n) {
    throw std::invalid_argument("second_eigenvalue_abs: requires d = n");
  }
  SecondEigenvalue out;
  constexpr double kUnitTol = 1e-8;
  if (use_dense_solver(op, options)) {
    const Eigen::ComplexEigenSolver<Matrix> es(op.dense(), false);
    const Vector& mu = es.eigenvalues();
    Index nearest = 0;
    int copies = 0;
    for (Index i = 0; i < mu.size(); ++i) {
      if (std::abs(mu(i) - 1.0) < std::abs(mu(nearest) - 1.0)) nearest = i;
      if (std::abs(mu(i) - 1.0) < kUnitTol) ++copies;
    }
    double best = 0.0;
    for (Index i = 0; i < mu.size(); ++i) {
      if (i != nearest) best = std::max(best, std::abs(mu(i)));
    }
    out.value = best;
    out.leading_multiplicity = std::max(copies, 1);
    out.nonunique_fixed_point = copies > 1;
    return out;
  }
  if (n < 2) return out;
  const LinearMap apply = [&](const Vector& v) {
    const Matrix x = hermitian_part(unvec_rows(v, n, n));
    return deflate_identity(vec_rows(op.channel_hermitian(x)), n);
  };
  const VectorSource source = [&] {
    return deflate_identity(vec_rows(random_hermitian(n, rng)), n);
  };
  ArnoldiOptions ao;
  ao.tol = options.eig_tol;
  ao.max_iter = options.max_iter;
  ao.real_coefficients = true;
  const ArnoldiResult r = arnoldi_dominant(apply, source, n * n - 1, ao);
  out.value = r.dominant_abs;
  out.iterations = r.iterations;
  out.residual = r.residual;
  out.converged = r.converged;
  int copies = 1;
  for (Index i = 0; i < r.ritz_values.size(); ++i) {
    if (std::abs(r.ritz_values(i) - 1.0) < kUnitTol) ++copies;
  }
  out.leading_multiplicity = copies;
  out.nonunique_fixed_point = copies > 1;
  return out;
}

FixedPoint fixed_point(const SuperOperator& op,
                       const FixedPointOptions& options) {
  const Index n = op.output_dim();
  if (op.input_dim() != n) {
    throw std::invalid_argument("fixed_point: requires d = n");
  }
  FixedPoint out;
  Matrix x = Matrix::Identity(n, n) / static_cast<double>(n);
  if (options.keep_iterates) out.iterates.push_back(x);
  for (int t = 0; t < options.max_iter; ++t) {
    Matrix next = op.channel_hermitian(x);
    const double r = (next - x).norm();
    out.residuals.push_back(r);
    x = std::move(next);
    out.iterations = t + 1;
    if (options.keep_iterates) out.iterates.push_back(x);
    if (r <= options.tol) {
      out.converged = true;
      break;
    }
  }
  out.state = std::move(x);
  return out;
}

RealVector hermitian_eigenvalues(const Matrix& rho) {
  const Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(rho),
                                                 Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double trace_norm_hermitian(const Matrix& x) {
  return hermitian_eigenvalues(x).cwiseAbs().sum();
}

double von_neumann_entropy(const Matrix& rho, double tol, LogBase base) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw std::invalid_argument("von_neumann_entropy: need a square matrix");
  }
  const RealVector mu = hermitian_eigenvalues(rho);
  if (mu(0) < -tol) {
    throw std::domain_error("von_neumann_entropy: negative eigenvalue");
  }
  double s = 0.0;
  for (Index i = 0; i < mu.size(); ++i) {
    if (mu(i) > 0.0) s -= mu(i) * std::log(mu(i));
  }
  return base == LogBase::kTwo ? s / std::log(2.0) : s;
}

SpectralReport analyze(const ChannelSample& sample,
                       const AnalyzeOptions& options, Rng& rng) {
  SpectralReport report;
  report.isometry_residual = isometry_residual(sample.isometry);
  report.trace_residual = trace_preservation_residual(sample.kraus);
  report.f = overlap_f(sample.kraus);
  const SuperOperator op(sample.kraus, options.representation);

  bool ok = report.isometry_residual < 1e-12 && report.trace_residual < 1e-12;
  if (options.singular_values) {
    const SingularValues sv = top_singular_values(op, options.spectral, rng);
    const NormEstimate rn = restricted_norm(op, options.spectral, rng);
    report.s1 = sv.s1;
    report.s2 = *sv.s2;
    report.restricted_norm = rn.value;
    report.gap_below_resolution = sv.gap_below_resolution;
    report.iterations += sv.iterations + rn.iterations;
    report.max_residual = std::max(sv.residual, rn.residual);
    report.converged = sv.converged && rn.converged;
    ok = ok && report.s1 >= std::sqrt(report.f) - 1e-8 &&
         report.s2 <= report.restricted_norm + 1e-8;
  }
  if (sample.d == sample.n) {
    if (options.second_eigenvalue) {
      const SecondEigenvalue l2 =
          second_eigenvalue_abs(op, options.spectral, rng);
      report.lambda2_abs = l2.value;
      report.nonunique_fixed_point = l2.nonunique_fixed_point;
      report.iterations += l2.iterations;
      report.max_residual = std::max(report.max_residual, l2.residual);
      report.converged = report.converged && l2.converged;
    }
    if (options.entropy) {
      const FixedPoint fp = fixed_point(op, options.fixed_point);
      report.iterations += fp.iterations;
      report.converged = report.converged && fp.converged;
      const RealVector mu = hermitian_eigenvalues(fp.state);
      ok = ok && mu(0) >= -1e-10 &&
           std::abs(fp.state.trace().real() - 1.0) < 1e-10;
      report.fixed_point_entropy = von_neumann_entropy(fp.state, 1e-10);
    }
  }
  report.invariants_hold = ok;
  return report;
}

}  // namespace rqc
