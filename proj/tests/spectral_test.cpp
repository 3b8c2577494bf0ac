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
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <gtest/gtest.h>

#include "rqc/channel.hpp"
#include "rqc/random.hpp"
#include "rqc/superoperator.hpp"

namespace rqc {
namespace {

// Reference values straight from the dense super-operator.
struct Reference {
  double s1, s2, restricted, lambda2;
};

Reference reference(const ChannelSample& s) {
  Matrix f = Matrix::Zero(s.n * s.n, s.d * s.d);
  for (const auto& a : s.kraus) f += kron(a, a.conjugate());
  const Eigen::JacobiSVD<Matrix> svd(f);
  Reference r{svd.singularValues()(0), svd.singularValues()(1), 0.0, -1.0};
  const Matrix p = Matrix::Identity(s.d * s.d, s.d * s.d) - max_entangled_projector(s.d);
  r.restricted = Eigen::JacobiSVD<Matrix>(f * p).singularValues()(0);
  if (s.n == s.d) {
    const Eigen::ComplexEigenSolver<Matrix> es(f, false);
    std::vector<double> mods;
    for (Index i = 0; i < es.eigenvalues().size(); ++i) mods.push_back(std::abs(es.eigenvalues()(i)));
    std::sort(mods.rbegin(), mods.rend());
    r.lambda2 = mods[1];
  }
  return r;
}

struct Shape {
  Index n, d, k;
};

class SpectralAgreement : public ::testing::TestWithParam<Shape> {};

TEST_P(SpectralAgreement, IterativeMatchesDense) {
  const auto [n, d, k] = GetParam();
  for (int trial = 0; trial < 3; ++trial) {
    Rng rng = make_stream(100 + n * 31 + d * 7 + k, trial);
    const ChannelSample s = ChannelSample::draw(n, d, k, rng);
    const Reference ref = reference(s);
    SpectralOptions opts;
    const SuperOperator mf(s.kraus, Representation::kMatrixFree);
    const SuperOperator dense(s.kraus, Representation::kDense);
    for (const SuperOperator* op : {&mf, &dense}) {
      const SingularValues sv = top_singular_values(*op, opts, rng);
      EXPECT_NEAR(sv.s1, ref.s1, 1e-8);
      EXPECT_NEAR(*sv.s2, ref.s2, 1e-8);
      EXPECT_NEAR(restricted_norm(*op, opts, rng).value, ref.restricted, 1e-8);
      if (n == d) {
        EXPECT_NEAR(second_eigenvalue_abs(*op, opts, rng).value, ref.lambda2, 1e-8);
      }
    }
    // Dense representation pushed onto the iterative path.
    SpectralOptions iterative = opts;
    iterative.dense_solver_limit = 0;
    EXPECT_NEAR(top_singular_values(dense, iterative, rng).s1, ref.s1, 1e-8);
    EXPECT_NEAR(restricted_norm(dense, iterative, rng).value, ref.restricted, 1e-8);
  }
}

INSTANTIATE_TEST_SUITE_P(Shapes, SpectralAgreement,
                         ::testing::Values(Shape{4, 4, 2}, Shape{6, 6, 3},
                                           Shape{8, 4, 3}, Shape{5, 8, 2},
                                           Shape{12, 12, 4}, Shape{16, 16, 5}));

TEST(Spectral, StructuralInequalities) {
  for (int trial = 0; trial < 10; ++trial) {
    Rng rng = make_stream(17, trial);
    const ChannelSample s = ChannelSample::draw(10, 10, 3, rng);
    const SpectralReport r = analyze(s, AnalyzeOptions{}, rng);
    EXPECT_TRUE(r.invariants_hold);
    EXPECT_TRUE(r.converged);
    EXPECT_GE(r.s1, std::sqrt(r.f) - 1e-8);
    EXPECT_LE(r.s2, r.restricted_norm + 1e-8);
    EXPECT_LE(r.restricted_norm, r.s1 + 1e-8);
    ASSERT_TRUE(r.lambda2_abs.has_value());
    EXPECT_LT(*r.lambda2_abs, 1.0);
    // |lambda_2| <= s2: the second eigenvalue lives on the complement.
    EXPECT_LE(*r.lambda2_abs, r.restricted_norm + 1e-8);
    ASSERT_TRUE(r.fixed_point_entropy.has_value());
    EXPECT_LE(*r.fixed_point_entropy, std::log(10.0) + 1e-12);
  }
}

TEST(Spectral, UnitaryChannelHasNoGap) {
  Rng rng(3);
  const ChannelSample s = ChannelSample::draw(5, 5, 1, rng);
  const SuperOperator op(s.kraus, Representation::kDense);
  const SingularValues sv = top_singular_values(op, SpectralOptions{}, rng);
  EXPECT_NEAR(sv.s1, 1.0, 1e-12);
  EXPECT_NEAR(*sv.s2, 1.0, 1e-12);
  EXPECT_TRUE(sv.gap_below_resolution);
  const SecondEigenvalue l2 = second_eigenvalue_abs(op, SpectralOptions{}, rng);
  EXPECT_NEAR(l2.value, 1.0, 1e-10);
  EXPECT_TRUE(l2.nonunique_fixed_point);
  EXPECT_EQ(l2.leading_multiplicity, 5);
}

TEST(Spectral, SingleSingularValueRequest) {
  Rng rng(4);
  const ChannelSample s = ChannelSample::draw(6, 6, 2, rng);
  const SuperOperator op(s.kraus, Representation::kMatrixFree);
  const SingularValues sv = top_singular_values(op, SpectralOptions{}, rng, 1);
  EXPECT_FALSE(sv.s2.has_value());
  EXPECT_NEAR(sv.s1, reference(s).s1, 1e-8);
  EXPECT_THROW(top_singular_values(op, SpectralOptions{}, rng, 3), std::invalid_argument);
}

TEST(FixedPoint, IsInvariantState) {
  Rng rng(5);
  const ChannelSample s = ChannelSample::draw(12, 12, 3, rng);
  const SuperOperator op(s.kraus, Representation::kMatrixFree);
  const FixedPoint fp = fixed_point(op);
  ASSERT_TRUE(fp.converged);
  EXPECT_LT((op.channel(fp.state) - fp.state).norm(), 1e-11);
  EXPECT_NEAR(fp.state.trace().real(), 1.0, 1e-12);
  EXPECT_GT(hermitian_eigenvalues(fp.state).minCoeff(), -1e-12);
  EXPECT_LT((fp.state - fp.state.adjoint()).norm(), 1e-14);
}

TEST(FixedPoint, ContractsAtTheSecondEigenvalueRate) {
  Rng rng(6);
  const ChannelSample s = ChannelSample::draw(12, 12, 3, rng);
  const SuperOperator op(s.kraus, Representation::kMatrixFree);
  FixedPointOptions fo;
  fo.keep_iterates = true;
  const FixedPoint fp = fixed_point(op, fo);
  ASSERT_TRUE(fp.converged);
  const double l2 = second_eigenvalue_abs(op, SpectralOptions{}, rng).value;
  for (std::size_t t = 0; t < fp.iterates.size(); ++t) {
    const double err = (fp.iterates[t] - fp.state).norm();
    EXPECT_LE(err, 2.0 * std::pow(l2, static_cast<double>(t)) + 1e-8) << "t=" << t;
  }
  // Tail ratio of successive differences.
  const auto& r = fp.residuals;
  ASSERT_GE(r.size(), 12u);
  for (std::size_t t = r.size() - 10; t < r.size(); ++t) {
    if (r[t - 1] < 1e-13) continue;  // below round-off the ratio is noise
    EXPECT_LE(r[t] / r[t - 1], l2 + 0.05) << "t=" << t;
  }
}

TEST(FixedPoint, RequiresSquareChannel) {
  Rng rng(7);
  const ChannelSample s = ChannelSample::draw(4, 3, 2, rng);
  const SuperOperator op(s.kraus, Representation::kMatrixFree);
  EXPECT_THROW(fixed_point(op), std::invalid_argument);
  EXPECT_THROW(second_eigenvalue_abs(op, SpectralOptions{}, rng), std::invalid_argument);
}

TEST(Entropy, KnownStates) {
  EXPECT_NEAR(von_neumann_entropy(Matrix::Identity(8, 8) / 8.0), std::log(8.0), 1e-14);
  EXPECT_NEAR(von_neumann_entropy(Matrix::Identity(8, 8) / 8.0, 1e-10, LogBase::kTwo), 3.0, 1e-14);
  Matrix pure = Matrix::Zero(3, 3);
  pure(1, 1) = 1.0;
  EXPECT_NEAR(von_neumann_entropy(pure), 0.0, 1e-15);
  Matrix bad = Matrix::Identity(2, 2);
  bad(1, 1) = -0.1;
  EXPECT_THROW(von_neumann_entropy(bad), std::domain_error);
  Matrix x = Matrix::Zero(2, 2);
  x(0, 0) = 1.0;
  x(1, 1) = -2.0;
  EXPECT_NEAR(trace_norm_hermitian(x), 3.0, 1e-14);
}

}  // namespace
}  // namespace rqc
