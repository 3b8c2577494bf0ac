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

#include "rqc/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <nlohmann/json.hpp>
#include <gtest/gtest.h>

namespace rqc {
namespace {

using boost::math::quadrature::tanh_sinh;

// chi_c by double-exponential quadrature of the raw integrand, which copes
// with the endpoint singularities without any substitution.
double chi_reference(double c) {
  const double a = (std::sqrt(c) - 1) * (std::sqrt(c) - 1);
  const double b = (std::sqrt(c) + 1) * (std::sqrt(c) + 1);
  tanh_sinh<double> q;
  const double inner = q.integrate(
      [&](double x) {
        return std::sqrt(std::max((x - a) * (b - x), 0.0)) /
               (2 * std::numbers::pi * std::sqrt(x));
      },
      a, b);
  return inner * inner / c;
}

TEST(MarchenkoPastur, NormalizedWithMeanAndVariance) {
  for (double c : {1.0, 2.0, 4.0, 7.5}) {
    const auto s = mp_support(c);
    tanh_sinh<double> q;
    const double mass = q.integrate([&](double x) { return mp_density(c, x); }, s.a, s.b);
    EXPECT_NEAR(mass, 1.0, 1e-8) << c;
    EXPECT_NEAR(mp_integral(c, [](double) { return 1.0; }), 1.0, 1e-10) << c;
    EXPECT_NEAR(mp_integral(c, [](double x) { return x; }), c, 1e-8) << c;
    EXPECT_NEAR(mp_integral(c, [](double x) { return x * x; }), c * c + c, 1e-8) << c;
  }
  EXPECT_EQ(mp_density(2.0, 0.01), 0.0);  // outside the support
  EXPECT_THROW(mp_support(0.5), std::domain_error);
}

TEST(Chi, ClosedFormAtOne) {
  const double want = std::pow(8.0 / (3.0 * std::numbers::pi), 2);
  EXPECT_NEAR(chi_limit(1.0), want, 1e-12);
}

TEST(Chi, MatchesIndependentQuadrature) {
  for (double c : {1.0, 1.5, 2.0, 4.0, 10.0, 100.0, 169.0}) {
    EXPECT_NEAR(chi_limit(c), chi_reference(c), 1e-10) << c;
  }
}

TEST(Chi, MonotoneTowardOne) {
  double prev = 0.0;
  for (double c : {1.0, 1.5, 2.0, 4.0, 10.0, 100.0}) {
    const double v = chi_limit(c);
    EXPECT_GT(v, prev);
    EXPECT_LE(v, 1.0);
    prev = v;
  }
  EXPECT_NEAR(chi_limit(1e4), 1.0, 1e-3);
  EXPECT_THROW(chi_limit(0.9), std::domain_error);
  EXPECT_DOUBLE_EQ(chi_finite_floor(16), 1.0 / 17.0);
}

TEST(Bounds, Formulas) {
  const double k = 169.0;
  const double g = g_bound(k, 1.0);
  EXPECT_NEAR(g, 8.0 / (chi_limit(169.0) * 13.0), 1e-14);
  EXPECT_NEAR(sv_gap_lower(k, 1.0), overlap_root(k, 1.0) - g, 1e-15);
  EXPECT_NEAR(sv_gap_upper(k, 1.0), overlap_root(k, 1.0) + g, 1e-15);
  EXPECT_NEAR(overlap_root(k, 1.0), std::sqrt(1 + 1 / k - 1 / (k * k)), 1e-15);
  EXPECT_NEAR(ev2_upper(k), (std::sqrt(1 + (k - 1) / (k * k)) + g) * g, 1e-15);
  EXPECT_THROW(g_bound(2.0, 2.0), std::domain_error);
  EXPECT_THROW(g_bound(0.5, 0.1), std::domain_error);
}

TEST(Bounds, ExplicitLowerBoundIsWeaker) {
  for (double k = 50; k <= 500; k += 10) {
    for (double lambda : {0.25, 0.5, 1.0, 2.0}) {
      EXPECT_LE(explicit_sv_gap_lower(k, lambda), sv_gap_lower(k, lambda) + 1e-15);
    }
  }
}

TEST(Bounds, GapLowerBoundIncreasesInK) {
  double prev = -1e9;
  for (double k = 50; k <= 500; k += 5) {
    const double v = sv_gap_lower(k, 1.0);
    EXPECT_GT(v, prev) << k;
    prev = v;
  }
}

TEST(Threshold, NontrivialityPoints) {
  const double k_sv = threshold([](double k) { return sv_gap_lower(k, 1.0); }, 0.0, 50, 80);
  EXPECT_NEAR(k_sv, 63.52, 0.05);
  const double k_ev = threshold([](double k) { return ev2_upper(k); }, 1.0, 150, 200);
  EXPECT_NEAR(k_ev, 168.5, 0.2);
  EXPECT_NEAR(ev2_upper(k_ev), 1.0, 10 * 1e-6);
  EXPECT_THROW(threshold([](double k) { return ev2_upper(k); }, 1.0, 180, 200),
               std::invalid_argument);
}

TEST(BoundSet, EvaluateAndSerialize) {
  const BoundSet one = BoundSet::evaluate(100, 1.0);
  ASSERT_TRUE(one.ev2_ub.has_value());
  EXPECT_DOUBLE_EQ(*one.ev2_ub, ev2_upper(100));
  const BoundSet half = BoundSet::evaluate(100, 0.5);
  EXPECT_FALSE(half.ev2_ub.has_value());
  nlohmann::json j = half;
  EXPECT_TRUE(j["ev2_ub"].is_null());
  EXPECT_DOUBLE_EQ(j["g"].get<double>(), g_bound(100, 0.5));
}

}  // namespace
}  // namespace rqc
