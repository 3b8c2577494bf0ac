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

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "rqc/channel.hpp"
#include "rqc/random.hpp"

namespace rqc {
namespace {

Matrix random_hermitian(Index n, Rng& rng) {
  return hermitian_part(sample_ginibre(n, n, 1.0, rng));
}

VectorSource gaussian_source(Index n, Rng& rng) {
  return [n, &rng] { return Vector(sample_ginibre(n, 1, 1.0, rng)); };
}

TEST(Lanczos, TopEigenvaluesOfRandomHermitian) {
  Rng rng(1);
  const Matrix a = random_hermitian(80, rng);
  const Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  const LinearMap op = [&](const Vector& v) { return Vector(a * v); };
  LanczosOptions opts;
  opts.count = 3;
  opts.max_iter = 80;
  const LanczosResult r = lanczos_largest(op, gaussian_source(80, rng), 80, opts);
  ASSERT_TRUE(r.converged);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(r.values(i), es.eigenvalues()(79 - i), 1e-9);
    const Vector y = r.vectors.col(i);
    EXPECT_LT((a * y - r.values(i) * y).norm(), 1e-8);
  }
}

TEST(Lanczos, FindsRepeatedEigenvalues) {
  Rng rng(2);
  // Spectrum {5, 5, 5, 1, 0.9, ...}: a single Krylov space sees one copy of 5.
  const Index n = 40;
  RealVector spec = RealVector::LinSpaced(n, -1.0, 1.0);
  spec(n - 1) = spec(n - 2) = spec(n - 3) = 5.0;
  const Matrix q = sample_haar_isometry(n, n, rng);
  const Matrix a = q * spec.cast<Complex>().asDiagonal() * q.adjoint();
  const LinearMap op = [&](const Vector& v) { return Vector(a * v); };
  LanczosOptions opts;
  opts.count = 3;
  const LanczosResult r = lanczos_largest(op, gaussian_source(n, rng), n, opts);
  ASSERT_EQ(r.values.size(), 3);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(r.values(i), 5.0, 1e-9);
}

TEST(Lanczos, SmallSubspaceIsExhausted) {
  Rng rng(3);
  const Matrix a = random_hermitian(6, rng);
  const Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  const LinearMap op = [&](const Vector& v) { return Vector(a * v); };
  LanczosOptions opts;
  opts.count = 2;
  const LanczosResult r = lanczos_largest(op, gaussian_source(6, rng), 6, opts);
  EXPECT_LE(r.iterations, 6);
  EXPECT_NEAR(r.values(0), es.eigenvalues()(5), 1e-12);
  EXPECT_NEAR(r.values(1), es.eigenvalues()(4), 1e-12);
}

TEST(Lanczos, RealCoefficientsOnRealSymmetric) {
  Rng rng(4);
  const Index n = 50;
  const Eigen::MatrixXd g = sample_ginibre(n, n, 1.0, rng).real();
  const Matrix a = ((g + g.transpose()) / 2).cast<Complex>();
  const Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  const LinearMap op = [&](const Vector& v) { return Vector(a * v); };
  const VectorSource src = [&] {
    return Vector(sample_ginibre(n, 1, 1.0, rng).real().cast<Complex>());
  };
  LanczosOptions opts;
  opts.real_coefficients = true;
  const LanczosResult r = lanczos_largest(op, src, n, opts);
  EXPECT_NEAR(r.values(0), es.eigenvalues()(n - 1), 1e-9);
  EXPECT_NEAR(r.values(1), es.eigenvalues()(n - 2), 1e-9);
}

TEST(Arnoldi, DominantEigenvalueOfNonnormalMatrix) {
  Rng rng(5);
  const Index n = 60;
  const Matrix a = sample_ginibre(n, n, 1.0 / n, rng);
  Matrix b = a;
  b(0, 0) += 3.0;  // isolate one dominant eigenvalue
  const Eigen::ComplexEigenSolver<Matrix> es(b);
  double want = 0.0;
  for (Index i = 0; i < n; ++i) want = std::max(want, std::abs(es.eigenvalues()(i)));
  const LinearMap op = [&](const Vector& v) { return Vector(b * v); };
  ArnoldiOptions opts;
  const ArnoldiResult r = arnoldi_dominant(op, gaussian_source(n, rng), n, opts);
  ASSERT_TRUE(r.converged);
  EXPECT_NEAR(r.dominant_abs, want, 1e-8);
}

TEST(Arnoldi, ExhaustsSmallSpace) {
  Rng rng(6);
  const Matrix a = sample_ginibre(5, 5, 1.0, rng);
  const Eigen::ComplexEigenSolver<Matrix> es(a);
  double want = 0.0;
  for (Index i = 0; i < 5; ++i) want = std::max(want, std::abs(es.eigenvalues()(i)));
  const LinearMap op = [&](const Vector& v) { return Vector(a * v); };
  const ArnoldiResult r = arnoldi_dominant(op, gaussian_source(5, rng), 5, {});
  EXPECT_TRUE(r.exhausted);
  EXPECT_NEAR(r.dominant_abs, want, 1e-10);
  EXPECT_EQ(r.ritz_values.size(), 5);
}

}  // namespace
}  // namespace rqc
