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

#ifndef RQC_KRYLOV_HPP
#define RQC_KRYLOV_HPP

#include <functional>

#include "rqc/linalg.hpp"

namespace rqc {

using LinearMap = std::function<Vector(const Vector&)>;
/// Produces a fresh random vector of the working subspace. Used for the
/// start vector and to continue after an invariant subspace is found.
using VectorSource = std::function<Vector()>;

struct LanczosOptions {
  int count = 2;           // wanted extreme eigenvalues
  double tol = 1e-11;      // residual bound, relative to the largest Ritz value
  int max_iter = 600;      // Krylov dimension cap
  int check_every = 5;
  bool real_coefficients = false;  // operator preserves a real form
};

struct LanczosResult {
  RealVector values;       // wanted Ritz values, descending
  Matrix vectors;          // matching Ritz vectors (columns)
  RealVector residuals;    // ||A y - theta y|| for each wanted pair
  int iterations = 0;
  bool converged = false;
};

/// Lanczos with full reorthogonalization for the largest eigenvalues of a
/// Hermitian map. `dim` is the ambient length; `subspace_dim` bounds the
/// Krylov dimension when the iteration is confined to an invariant
/// subspace (e.g. Hermitian matrices inside C^{d^2}). Breakdowns restart
/// from a new random vector orthogonalized against the basis, so repeated
/// eigenvalues are found with their multiplicity.
LanczosResult lanczos_largest(const LinearMap& op, const VectorSource& source,
                              Index subspace_dim, const LanczosOptions& options);

struct ArnoldiOptions {
  double tol = 1e-10;      // relative residual of the dominant Ritz pair
  int max_iter = 400;
  int check_every = 10;
  bool real_coefficients = false;
};

struct ArnoldiResult {
  Vector ritz_values;      // all Ritz values of the final Hessenberg matrix
  double dominant_abs = 0.0;  // largest |Ritz value|
  double residual = 0.0;   // residual bound of that pair
  int iterations = 0;
  bool converged = false;
  bool exhausted = false;  // Krylov space became invariant: values are exact
};

/// Arnoldi with full reorthogonalization for the eigenvalue of largest
/// modulus of a general map restricted to an invariant subspace.
ArnoldiResult arnoldi_dominant(const LinearMap& op, const VectorSource& source,
                               Index subspace_dim,
                               const ArnoldiOptions& options);

}  // namespace rqc

#endif  // RQC_KRYLOV_HPP
