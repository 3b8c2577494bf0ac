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

#ifndef RQC_SPECTRAL_HPP
#define RQC_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "rqc/channel.hpp"
#include "rqc/linalg.hpp"
#include "rqc/random.hpp"
#include "rqc/superoperator.hpp"

namespace rqc {

struct SpectralOptions {
  double tol = 1e-10;      // relative residual for Lanczos (singular values)
  double eig_tol = 1e-8;   // relative residual for Arnoldi (|lambda_2|)
  int max_iter = 600;      // Krylov dimension cap
  // Dense operators with max(n^2, d^2) at most this use full SVD / eigen
  // decompositions; larger ones fall back to the iterative solvers.
  Index dense_solver_limit = 1024;
};

struct SingularValues {
  double s1 = 0.0;
  std::optional<double> s2;  // absent when only s1 was requested
  int iterations = 0;
  double residual = 0.0;
  bool converged = true;
  bool gap_below_resolution = false;  // s1 - s2 < 10 tol
};

/// The largest `count` (1 or 2) singular values of F. The iterative path
/// runs Lanczos on F^dagger F over Hermitian d x d matrices, a real form of
/// C^{d^2} that F^dagger F preserves and on which it has the same spectrum.
SingularValues top_singular_values(const SuperOperator& op,
                                   const SpectralOptions& options, Rng& rng,
                                   int count = 2);

struct NormEstimate {
  double value = 0.0;
  int iterations = 0;
  double residual = 0.0;
  bool converged = true;
};

/// ||F (I - omega_d)||_inf.
NormEstimate restricted_norm(const SuperOperator& op,
                             const SpectralOptions& options, Rng& rng);

struct SecondEigenvalue {
  double value = 0.0;       // |lambda_2|
  int iterations = 0;
  double residual = 0.0;
  bool converged = true;
  int leading_multiplicity = 1;  // copies of the eigenvalue 1 detected
  bool nonunique_fixed_point = false;
};

/// |lambda_2(F)| for a square channel (d = n). The eigenvalue 1 belongs to
/// the fixed point, with left eigenvector vec(I_n); its spectral complement
/// is the space of traceless matrices, where the iterative path runs
/// Arnoldi (restricted further to traceless Hermitian matrices).
SecondEigenvalue second_eigenvalue_abs(const SuperOperator& op,
                                       const SpectralOptions& options,
                                       Rng& rng);

struct FixedPointOptions {
  double tol = 1e-12;       // stop once ||Phi(X_t) - X_t||_F <= tol
  int max_iter = 10000;
  bool keep_iterates = false;
};

struct FixedPoint {
  Matrix state;                    // Lambda
  int iterations = 0;
  bool converged = false;
  std::vector<double> residuals;   // ||X_{t+1} - X_t||_F, t = 0, 1, ...
  std::vector<Matrix> iterates;    // X_t = Phi^t(I/n), if requested
};

/// Iterates Phi from I/n. Non-convergence is reported, not thrown.
FixedPoint fixed_point(const SuperOperator& op,
                       const FixedPointOptions& options = {});

enum class LogBase { kNatural, kTwo };

/// -sum mu log mu over the eigenvalues of rho. Throws std::domain_error if an
/// eigenvalue is below -tol.
double von_neumann_entropy(const Matrix& rho, double tol = 1e-10,
                           LogBase base = LogBase::kNatural);

/// Hermitian eigenvalues, ascending.
RealVector hermitian_eigenvalues(const Matrix& rho);
/// Trace norm of a Hermitian matrix.
double trace_norm_hermitian(const Matrix& x);

struct AnalyzeOptions {
  SpectralOptions spectral;
  FixedPointOptions fixed_point;
  Representation representation = Representation::kMatrixFree;
  bool second_eigenvalue = true;   // only meaningful when d = n
  bool entropy = true;             // only meaningful when d = n
  bool singular_values = true;
};

struct SpectralReport {
  double f = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double restricted_norm = 0.0;
  std::optional<double> lambda2_abs;
  std::optional<double> fixed_point_entropy;
  int iterations = 0;              // Krylov steps plus fixed-point steps
  double max_residual = 0.0;
  bool converged = true;
  bool gap_below_resolution = false;
  bool nonunique_fixed_point = false;
  double isometry_residual = 0.0;
  double trace_residual = 0.0;
  /// Per-sample invariants: residuals below 1e-12, s1 >= sqrt(f) and
  /// s2 <= restricted_norm, each up to 1e-8.
  bool invariants_hold = true;
};

SpectralReport analyze(const ChannelSample& sample,
                       const AnalyzeOptions& options, Rng& rng);

}  // namespace rqc

#endif  // RQC_SPECTRAL_HPP
