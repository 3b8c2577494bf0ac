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

#include "rqc/weingarten.hpp"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

namespace rqc {
namespace {

Rational frac(std::int64_t num, std::int64_t den) {
  return Rational(BigInt(num), BigInt(den));
}

TEST(Weingarten, ClosedFormsLowOrder) {
  for (std::int64_t n = 3; n <= 9; ++n) {
    const auto w1 = weingarten_exact(1, n);
    EXPECT_EQ(w1.value(CycleType{{1}}), frac(1, n));

    const auto w2 = weingarten_exact(2, n);
    EXPECT_EQ(w2.value(CycleType{{1, 1}}), frac(1, n * n - 1));
    EXPECT_EQ(w2.value(CycleType{{2}}), frac(-1, n * (n * n - 1)));

    const auto w3 = weingarten_exact(3, n);
    const std::int64_t q = (n * n - 1) * (n * n - 4);
    EXPECT_EQ(w3.value(CycleType{{1, 1, 1}}), frac(n * n - 2, n * q));
    EXPECT_EQ(w3.value(CycleType{{2, 1}}), frac(-1, q));
    EXPECT_EQ(w3.value(CycleType{{3}}), frac(2, n * q));
  }
}

TEST(Weingarten, ConvolutionIdentity) {
  for (int p = 1; p <= 4; ++p) {
    for (std::int64_t n = p; n <= p + 6; ++n) {
      EXPECT_TRUE(check_convolution_identity(weingarten_exact(p, n)))
          << "p=" << p << " n=" << n;
    }
  }
}

TEST(Weingarten, GramAndClassSystemAgree) {
  for (int p = 1; p <= 4; ++p) {
    for (std::int64_t n = p; n <= p + 3; ++n) {
      EXPECT_EQ(weingarten_gram(p, n).entries(),
                weingarten_class_system(p, n).entries());
    }
  }
}

// E |U_11|^{2p} = p! (n-1)! / (n+p-1)! since |U_11|^2 ~ Beta(1, n-1);
// the Weingarten sum gives p! sum_sigma Wg(n, sigma), so the p! cancels.
TEST(Weingarten, MatchesHaarEntryMoments) {
  for (int p = 1; p <= 6; ++p) {
    for (std::int64_t n = p; n <= p + 4; ++n) {
      const auto w = weingarten_exact(p, n, WeingartenOptions{8});
      Rational total = 0;
      for (const auto& s : all_permutations(p)) total += w.value(s);
      Rational expected = 1;
      for (int j = 0; j < p; ++j) expected /= Rational(n + j);
      EXPECT_EQ(total, expected) << "p=" << p << " n=" << n;
    }
  }
}

TEST(Weingarten, LeadingAsymptotics) {
  const std::int64_t n = 20000;
  const auto w = weingarten_exact(4, n);
  for (const auto& s : all_permutations(4)) {
    const double exact = static_cast<double>(w.value(s));
    const double lead = weingarten_asymptotic(n, s);
    EXPECT_NEAR(exact / lead, 1.0, 1e-6) << s.str();
  }
}

TEST(Weingarten, RejectsSmallDimensionAndLargeOrder) {
  EXPECT_THROW(weingarten_exact(3, 2), std::domain_error);
  EXPECT_THROW(weingarten_exact(5, 10), std::out_of_range);
  EXPECT_NO_THROW(weingarten_exact(5, 10, WeingartenOptions{5}));
  EXPECT_THROW(weingarten_exact(0, 4), std::invalid_argument);
}

TEST(Weingarten, JsonRoundTripsExactly) {
  const auto w = weingarten_exact(3, 5);
  const auto j = w.to_json();
  EXPECT_EQ(j["order"], 3);
  EXPECT_EQ(j["dimension"], 5);
  ASSERT_EQ(j["entries"].size(), 3u);
  for (const auto& e : j["entries"]) {
    const Rational r(BigInt(e["numerator"].get<std::string>()),
                     BigInt(e["denominator"].get<std::string>()));
    bool found = false;
    for (const auto& [type, value] : w.entries()) found = found || value == r;
    EXPECT_TRUE(found);
  }
}

TEST(Weingarten, BigPow) {
  EXPECT_EQ(big_pow(10, 30), BigInt("1000000000000000000000000000000"));
  EXPECT_EQ(big_pow(7, 0), BigInt(1));
}

}  // namespace
}  // namespace rqc
