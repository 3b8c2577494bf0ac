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

#ifndef RQC_MOMENTS_HPP
#define RQC_MOMENTS_HPP

#include <cstdint>

#include "rqc/permutation.hpp"
#include "rqc/weingarten.hpp"

namespace rqc {

/// Parameters of a moment E f^p of the overlap f = ||F Omega_d||^2 for the
/// channel induced by a Haar isometry C^d -> C^n (x) C^k.
struct MomentSpec {
  int p = 1;
  std::int64_t n = 1;
  std::int64_t d = 1;
  std::int64_t k = 1;

  /// d = round(lambda * n); the realized ratio is d / n.
  static MomentSpec from_lambda(int p, std::int64_t n, std::int64_t k,
                                double lambda);
  double realized_lambda() const {
    return static_cast<double>(d) / static_cast<double>(n);
  }
  /// Throws std::invalid_argument unless p, n, d, k >= 1 and d <= n k.
  void validate() const;
};

/// delta = (1 2)(3 4)...(2p-1 2p) in S_{2p}: boxes are ordered
/// (1^T, 1^B, 2^T, 2^B, ...) and delta swaps each top box with its bottom box.
Permutation delta_permutation(int p);

struct ExactMomentOptions {
  /// The default restricts to p <= 2 (S_4 double sum). p = 3 needs the
  /// order-6 Weingarten function and ~5e5 terms.
  bool allow_order3 = false;
};

/// E f^p at finite (n, d, k), exactly:
///   d^-p sum_{a,b in S_2p} n^{#a} k^{#(delta^-1 a)} d^{#(delta^-1 b)}
///        Wg(nk, a^-1 b).
/// Requires n k >= 2p.
Rational exact_moment_f(const MomentSpec& spec,
                        const ExactMomentOptions& options = {});

/// (lambda + 1/k - lambda/k^2)^p. Requires k >= 1 and 0 < lambda < k.
double limit_moment(int p, std::int64_t k, double lambda);

/// k^-p sum_{A subset B subset [p]} (k lambda)^|A| (-lambda/k)^|B \ A|,
/// enumerated over all nested pairs. p <= 20.
double geodesic_moment(int p, std::int64_t k, double lambda);

/// Enumerates sum_{A subset B subset [p]} x^|A| y^|B \ A| and compares with
/// (1 + x + y)^p to 1e-12 relative to (1 + |x| + |y|)^p, the size of the
/// terms being summed. p <= 20.
bool multinomial_identity_check(int p, double x, double y);

/// Left side of the identity above, by enumeration.
double nested_subset_sum(int p, double x, double y);

}  // namespace rqc

#endif  // RQC_MOMENTS_HPP
