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

#include "rqc/moments.hpp"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

#include "rqc/channel.hpp"
#include "rqc/random.hpp"
#include "rqc/stats.hpp"

namespace rqc {
namespace {

double as_double(const Rational& r) { return static_cast<double>(r); }

// d = 1: Phi(1) is the reduced state of a Haar vector on C^n (x) C^k, so
// f = tr(rho^2) and E f = (n + k) / (n k + 1).
TEST(ExactMoment, PureStatePurity) {
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t k = 1; k <= 4; ++k) {
      if (n * k < 2) continue;
      const Rational m = exact_moment_f(MomentSpec{1, n, 1, k});
      EXPECT_EQ(m, Rational(BigInt(n + k), BigInt(n * k + 1)))
          << "n=" << n << " k=" << k;
    }
  }
}

// k = 1, d = n: F = U (x) conj(U) is unitary, so f = 1 surely.
TEST(ExactMoment, UnitaryChannelIsOne) {
  for (std::int64_t n = 2; n <= 5; ++n) {
    EXPECT_EQ(exact_moment_f(MomentSpec{1, n, n, 1}), Rational(1));
    EXPECT_EQ(exact_moment_f(MomentSpec{2, n * 2, n * 2, 1}), Rational(1));
  }
}

TEST(ExactMoment, AgreesWithSampling) {
  const MomentSpec spec{1, 4, 2, 2};
  const double exact = as_double(exact_moment_f(spec));
  RunningStats stats;
  for (int t = 0; t < 4000; ++t) {
    Rng rng = make_stream(11, static_cast<std::uint64_t>(t));
    stats.add(overlap_f(ChannelSample::draw(spec.n, spec.d, spec.k, rng)));
  }
  EXPECT_NEAR(stats.mean(), exact, 4.0 * stats.standard_error());
}

TEST(ExactMoment, SecondMomentDominatesSquaredFirst) {
  const MomentSpec one{1, 6, 3, 2};
  const MomentSpec two{2, 6, 3, 2};
  const Rational m1 = exact_moment_f(one);
  const Rational m2 = exact_moment_f(two);
  EXPECT_GE(m2, m1 * m1);  // Jensen
}

TEST(ExactMoment, ConvergesToLimit) {
  double previous = 1e9;
  for (std::int64_t n : {4, 8, 16, 32}) {
    const MomentSpec spec{2, n, n, 2};
    const double residual =
        std::abs(as_double(exact_moment_f(spec)) - limit_moment(2, 2, 1.0));
    EXPECT_LT(residual, previous);
    previous = residual;
  }
  EXPECT_LT(previous, 1e-2);
}

TEST(ExactMoment, Guards) {
  EXPECT_THROW(exact_moment_f(MomentSpec{3, 4, 4, 2}), std::out_of_range);
  EXPECT_THROW(exact_moment_f(MomentSpec{2, 1, 1, 2}), std::domain_error);
  EXPECT_THROW(exact_moment_f(MomentSpec{1, 2, 5, 2}), std::invalid_argument);
  EXPECT_THROW(exact_moment_f(MomentSpec{0, 2, 2, 2}), std::invalid_argument);
}

TEST(ExactMoment, OrderThreeOptIn) {
  const MomentSpec spec{3, 3, 3, 2};
  const Rational m3 = exact_moment_f(spec, ExactMomentOptions{true});
  const Rational m1 = exact_moment_f(MomentSpec{1, 3, 3, 2});
  EXPECT_GT(m3, 0);
  EXPECT_GE(m3, m1 * m1 * m1);
}

TEST(MomentSpec, FromLambdaRounds) {
  const MomentSpec s = MomentSpec::from_lambda(2, 10, 3, 0.25);
  EXPECT_EQ(s.d, 3);  // round(2.5) away from zero
  EXPECT_DOUBLE_EQ(s.realized_lambda(), 0.3);
  EXPECT_THROW(MomentSpec::from_lambda(1, 4, 2, 2.0), std::invalid_argument);
  EXPECT_THROW(MomentSpec::from_lambda(1, 4, 2, 0.0), std::invalid_argument);
}

TEST(LimitMoment, ClosedForm) {
  EXPECT_DOUBLE_EQ(limit_moment(2, 2, 1.0), 1.5625);
  EXPECT_DOUBLE_EQ(limit_moment(0, 3, 0.5), 1.0);
  EXPECT_NEAR(limit_moment(3, 4, 2.0), std::pow(2.0 + 0.25 - 2.0 / 16.0, 3), 1e-15);
}

TEST(LimitMoment, GeodesicEnumerationAgrees) {
  for (int p = 1; p <= 10; ++p) {
    for (std::int64_t k : {1, 2, 5, 169}) {
      for (double lambda : {0.25, 0.5, 1.0}) {
        if (lambda >= static_cast<double>(k)) continue;
        const double lim = limit_moment(p, k, lambda);
        EXPECT_NEAR(geodesic_moment(p, k, lambda), lim, 1e-12 * std::max(1.0, lim));
      }
    }
  }
}

TEST(LimitMoment, NestedSubsetsAreTrinomial) {
  for (int p = 0; p <= 12; ++p) {
    for (double x : {-0.7, 0.0, 0.3, 2.0}) {
      for (double y : {-0.2, 0.5, 1.5}) {
        EXPECT_TRUE(multinomial_identity_check(p, x, y));
        // Compensated summation: accurate relative to the absolute terms.
        EXPECT_NEAR(nested_subset_sum(p, x, y), std::pow(1 + x + y, p),
                    1e-14 * std::pow(1 + std::abs(x) + std::abs(y), p));
      }
    }
  }
  // 3^p nested pairs at x = y = 1.
  EXPECT_DOUBLE_EQ(nested_subset_sum(5, 1.0, 1.0), 243.0);
  EXPECT_THROW(nested_subset_sum(21, 1.0, 1.0), std::out_of_range);
}

}  // namespace
}  // namespace rqc
