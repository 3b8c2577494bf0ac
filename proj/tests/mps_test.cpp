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

#include "rqc/mps.hpp"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "rqc/channel.hpp"
#include "rqc/spectral.hpp"
#include "rqc/superoperator.hpp"

namespace rqc {
namespace {

TEST(Embed, MatchesExplicitKronecker) {
  Rng rng(1);
  const ChannelSample s = ChannelSample::draw(4, 4, 3, rng);
  for (Index r : {1, 3}) {
    const Matrix x = sample_ginibre(4 * r, 4 * r, 1.0, rng);
    const Matrix w = kron(s.isometry, Matrix::Identity(r, r));
    const Matrix want = w * x * w.adjoint();
    EXPECT_LT((embed_apply(s.isometry, x) - want).norm(), 1e-12 * want.norm());
  }
  EXPECT_THROW(embed_apply(s.isometry, Matrix::Zero(5, 5)), std::invalid_argument);
}

// rho_2 on the physical register, entry by entry:
// <i2 i1| rho |j2 j1> = tr(A_i2 A_i1 Lambda A_j1^dagger A_j2^dagger).
TEST(Embed, PhysicalRegisterFromKrausWords) {
  Rng rng(2);
  const Index k = 3;
  const ChannelSample s = ChannelSample::draw(5, 5, k, rng);
  const ReducedDensityResult r = reduced_density(s, 2);
  ASSERT_TRUE(r.fixed_point.converged);
  const Matrix& lambda = r.fixed_point.state;
  const Matrix phys = trace_out_bond(r.state.matrix, 5);
  for (Index i2 = 0; i2 < k; ++i2) {
    for (Index i1 = 0; i1 < k; ++i1) {
      for (Index j2 = 0; j2 < k; ++j2) {
        for (Index j1 = 0; j1 < k; ++j1) {
          const auto& a = s.kraus;
          const Complex want = (a[i2] * a[i1] * lambda * a[j1].adjoint() * a[j2].adjoint()).trace();
          EXPECT_LT(std::abs(phys(i2 * k + i1, j2 * k + j1) - want), 1e-12);
        }
      }
    }
  }
}

TEST(Embed, BondMarginalIsTheFixedPoint) {
  Rng rng(3);
  const ChannelSample s = ChannelSample::draw(6, 6, 2, rng);
  const ReducedDensityResult r = reduced_density(s, 3);
  // Trace out the three physical sites (fastest indices).
  const Matrix& rho = r.state.matrix;
  const Index phys = 8;
  Matrix bond = Matrix::Zero(6, 6);
  for (Index a = 0; a < 6; ++a) {
    for (Index b = 0; b < 6; ++b) {
      for (Index p = 0; p < phys; ++p) bond(a, b) += rho(a * phys + p, b * phys + p);
    }
  }
  EXPECT_LT((bond - r.fixed_point.state).norm(), 1e-10);
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
}

TEST(Embed, BudgetGuard) {
  Rng rng(4);
  const ChannelSample s = ChannelSample::draw(8, 8, 4, rng);
  const Matrix start = Matrix::Identity(8, 8) / 8.0;
  EXPECT_THROW(embed_power(s, start, 3, 256), std::length_error);
  EXPECT_NO_THROW(embed_power(s, start, 2, 256));
  MpsSpec spec{8, 4, 3, 1, 0, 0, 256};
  EXPECT_THROW(spec.validate(), std::invalid_argument);
}

TEST(Mps, TrialIsConsistent) {
  MpsSpec spec;
  spec.bond = 8;
  spec.physical = 2;
  spec.sites = 2;
  spec.trials = 3;
  spec.seed = 77;
  const auto trials = mps_purity_experiment(spec);
  ASSERT_EQ(trials.size(), 3u);
  for (const auto& t : trials) {
    EXPECT_TRUE(t.invariants_hold);
    EXPECT_TRUE(t.fixed_point_converged);
    EXPECT_EQ(t.depth, default_depth(8));
    EXPECT_GE(t.purity, 1.0 / 4.0 - 1e-12);
    EXPECT_LE(t.entropy, 2.0 * std::log(2.0) + 1e-12);
    EXPECT_GE(t.purity_full, 1.0 / 32.0 - 1e-12);
    EXPECT_GE(t.tv_gap, 0.0);
    EXPECT_LE(t.tv_gap, 2.0);
  }
  const MpsTrial again = mps_trial(spec, 1);
  EXPECT_EQ(again.purity, trials[1].purity);
  EXPECT_EQ(again.tv_gap, trials[1].tv_gap);
}

TEST(Mps, ApproximationImprovesWithDepth) {
  MpsSpec spec;
  spec.bond = 10;
  spec.physical = 3;
  spec.sites = 1;
  spec.trials = 1;
  spec.seed = 5;
  spec.depth = 2;
  const double shallow = mps_trial(spec, 0).tv_gap;
  spec.depth = 30;
  const double deep = mps_trial(spec, 0).tv_gap;
  EXPECT_LT(deep, shallow);
  // E is an isometric conjugation, so ||rho_l - rho~_l||_1 is at most
  // sqrt(D k^l) ||Lambda - Phi^t(I/D)||_2 <= sqrt(D k^l) 2 |lambda_2|^t.
  Rng rng = make_stream(spec.seed, 0);
  const ChannelSample s = ChannelSample::draw(10, 10, 3, rng);
  const SuperOperator op(s.kraus, Representation::kMatrixFree);
  const double l2 = second_eigenvalue_abs(op, SpectralOptions{}, rng).value;
  EXPECT_LE(deep, std::sqrt(30.0) * (2.0 * std::pow(l2, 30) + 1e-10));
}

TEST(Mps, DefaultDepth) {
  EXPECT_EQ(default_depth(1), 1);
  EXPECT_EQ(default_depth(32), 18);  // ceil(5 ln 32) = ceil(17.33)
  EXPECT_EQ(default_depth(100000000), 50);
}

TEST(Amplitude, CyclicAndExplicit) {
  Rng rng(6);
  const ChannelSample s = ChannelSample::draw(4, 4, 3, rng);
  const auto& a = s.kraus;
  const Complex amp = mps_amplitude(a, {1, 3, 2, 2});
  EXPECT_LT(std::abs(amp - (a[1] * a[1] * a[2] * a[0]).trace()), 1e-14);
  EXPECT_LT(std::abs(amp - mps_amplitude(a, {3, 2, 2, 1})), 1e-13);
  EXPECT_LT(std::abs(amp - mps_amplitude(a, {2, 1, 3, 2})), 1e-13);
  EXPECT_LT(std::abs(mps_amplitude(a, {}) - 4.0), 1e-15);
  EXPECT_THROW(mps_amplitude(a, {0}), std::out_of_range);
  EXPECT_THROW(mps_amplitude(a, {4}), std::out_of_range);
}

}  // namespace
}  // namespace rqc
