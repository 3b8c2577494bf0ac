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

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace rqc {
namespace {

constexpr int kMaxEnumerationOrder = 20;

void check_ratio(std::int64_t k, double lambda) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(lambda > 0.0) || !(lambda < static_cast<double>(k))) {
    throw std::invalid_argument("lambda must lie in (0, k)");
  }
}

}  // namespace

MomentSpec MomentSpec::from_lambda(int p, std::int64_t n, std::int64_t k,
                                   double lambda) {
  check_ratio(k, lambda);
  MomentSpec spec{p, n, std::llround(lambda * static_cast<double>(n)), k};
  spec.validate();
  return spec;
}

void MomentSpec::validate() const {
  if (p < 1) throw std::invalid_argument("moment order p must be >= 1");
  if (n < 1 || d < 1 || k < 1) {
    throw std::invalid_argument("dimensions n, d, k must be >= 1");
  }
  if (d > n * k) {
    throw std::invalid_argument("d > n k: no isometry C^d -> C^n (x) C^k");
  }
}

Permutation delta_permutation(int p) {
  if (p < 1) throw std::invalid_argument("delta_permutation: p must be >= 1");
  std::vector<std::vector<int>> cycles;
  for (int i = 1; i <= p; ++i) cycles.push_back({2 * i - 1, 2 * i});
  return Permutation::from_cycles(2 * p, cycles);
}

Rational exact_moment_f(const MomentSpec& spec,
                        const ExactMomentOptions& options) {
  spec.validate();
  const int max_p = options.allow_order3 ? 3 : 2;
  if (spec.p > max_p) {
    throw std::out_of_range("exact_moment_f: order too large (p = " +
                            std::to_string(spec.p) + ", cap " +
                            std::to_string(max_p) + ")");
  }
  const int order = 2 * spec.p;
  const std::int64_t nk = spec.n * spec.k;
  if (nk < order) {
    throw std::domain_error(
        "exact_moment_f: n k < 2p, the Weingarten Gram matrix may be singular");
  }
  const auto wg = weingarten_exact(order, nk, WeingartenOptions{order});
  const Permutation delta = delta_permutation(spec.p);
  const Permutation delta_inv = delta.inverse();
  const auto perms = all_permutations(order);

  std::vector<int> cycles(perms.size());
  std::vector<int> delta_cycles(perms.size());
  std::vector<Permutation> inverses;
  inverses.reserve(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    cycles[i] = perms[i].cycle_count();
    delta_cycles[i] = (delta_inv * perms[i]).cycle_count();
    inverses.push_back(perms[i].inverse());
  }

  // Terms depend on (#a, #(delta^-1 a), #(delta^-1 b), class(a^-1 b)) only;
  // tally multiplicities first, then do the big-number arithmetic once per key.
  std::map<std::tuple<int, int, int, CycleType>, std::int64_t> tally;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      ++tally[{cycles[a], delta_cycles[a], delta_cycles[b],
               (inverses[a] * perms[b]).cycle_type()}];
    }
  }
  Rational sum = 0;
  for (const auto& [key, count] : tally) {
    const auto& [ca, cda, cdb, type] = key;
    const BigInt weight = big_pow(spec.n, ca) * big_pow(spec.k, cda) *
                          big_pow(spec.d, cdb) * count;
    sum += Rational(weight) * wg.value(type);
  }
  return sum / Rational(big_pow(spec.d, spec.p));
}

double limit_moment(int p, std::int64_t k, double lambda) {
  check_ratio(k, lambda);
  if (p < 0) throw std::invalid_argument("limit_moment: p must be >= 0");
  const double kk = static_cast<double>(k);
  return std::pow(lambda + 1.0 / kk - lambda / (kk * kk), p);
}

double nested_subset_sum(int p, double x, double y) {
  if (p < 0 || p > kMaxEnumerationOrder) {
    throw std::out_of_range("nested subset enumeration needs 0 <= p <= 20");
  }
  std::vector<double> px(static_cast<std::size_t>(p) + 1, 1.0);
  std::vector<double> py(static_cast<std::size_t>(p) + 1, 1.0);
  for (int e = 1; e <= p; ++e) {
    px[e] = px[e - 1] * x;
    py[e] = py[e - 1] * y;
  }
  const std::uint32_t full = (p == 0) ? 0u : ((1u << p) - 1u);
  // Up to 3^20 terms of mixed sign: Neumaier-compensated summation.
  double sum = 0.0;
  double carry = 0.0;
  // B ranges over subsets of [p], A over subsets of B (submask walk).
  for (std::uint32_t b = 0;; ++b) {
    const int size_b = std::popcount(b);
    for (std::uint32_t a = b;; a = (a - 1) & b) {
      const int size_a = std::popcount(a);
      const double term = px[size_a] * py[size_b - size_a];
      const double t = sum + term;
      carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
      sum = t;
      if (a == 0) break;
    }
    if (b == full) break;
  }
  return sum + carry;
}

double geodesic_moment(int p, std::int64_t k, double lambda) {
  check_ratio(k, lambda);
  if (p < 1 || p > kMaxEnumerationOrder) {
    throw std::out_of_range("geodesic_moment: p must be in [1, 20]");
  }
  const double kk = static_cast<double>(k);
  return std::pow(kk, -p) * nested_subset_sum(p, kk * lambda, -lambda / kk);
}

bool multinomial_identity_check(int p, double x, double y) {
  const double lhs = nested_subset_sum(p, x, y);
  const double rhs = std::pow(1.0 + x + y, p);
  // Rounding in either side scales with the sum of |terms|, not the result.
  const double scale = std::max(
      {1.0, std::abs(rhs), std::pow(1.0 + std::abs(x) + std::abs(y), p)});
  return std::abs(lhs - rhs) <= 1e-12 * scale;
}

}  // namespace rqc
