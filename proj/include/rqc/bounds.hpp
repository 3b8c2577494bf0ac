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

#ifndef RQC_BOUNDS_HPP
#define RQC_BOUNDS_HPP

#include <functional>
#include <optional>

#include <nlohmann/json_fwd.hpp>

namespace rqc {

// All bound functions treat k as a real parameter.

/// Marchenko-Pastur density of parameter c >= 1 (no atom at 0):
/// sqrt((b - x)(x - a)) / (2 pi x) on [a, b], a = (sqrt c - 1)^2,
/// b = (sqrt c + 1)^2, zero elsewhere.
double mp_density(double c, double x);

/// Support [a, b] of MP_c.
struct MpSupport {
  double a;
  double b;
};
MpSupport mp_support(double c);

/// Integral of g against MP_c, through x = a + (b - a) sin^2(theta), which
/// makes the integrand smooth at both edges (and at 0 when c = 1).
double mp_integral(double c, const std::function<double(double)>& g,
                   double tol = 1e-12);

/// chi_c = c^{-1} (int sqrt(x) dMP_c)^2. Throws std::domain_error for c < 1
/// and std::runtime_error if the quadrature does not settle.
double chi_limit(double c);

/// 1 / (N + 1).
double chi_finite_floor(long n);

/// g_{k, lambda} = 2 (1 + sqrt lambda)^2 / (chi_{k / lambda} sqrt k).
/// Throws std::domain_error unless 0 < lambda < k.
double g_bound(double k, double lambda);

/// sqrt(lambda + 1/k - lambda/k^2), the limit of sqrt(E f).
double overlap_root(double k, double lambda);

double sv_gap_lower(double k, double lambda);
double sv_gap_upper(double k, double lambda);
/// The lower bound with chi_{k/lambda} replaced by chi_1 = (8 / (3 pi))^2.
double explicit_sv_gap_lower(double k, double lambda);
/// (sqrt(1 + (k - 1)/k^2) + g_{k,1}) g_{k,1}; lambda = 1.
double ev2_upper(double k);

/// Bisection root of bound(k) = target on [lo, hi] down to |dk| < tol.
/// Throws std::invalid_argument if there is no sign change.
double threshold(const std::function<double(double)>& bound, double target,
                 double lo, double hi, double tol = 1e-6);

struct BoundSet {
  double k = 0.0;
  double lambda = 0.0;
  double chi = 0.0;
  double g = 0.0;
  double sv_gap_lb = 0.0;
  double sv_gap_ub = 0.0;
  std::optional<double> ev2_ub;  // lambda = 1 only
  double explicit_lb = 0.0;

  static BoundSet evaluate(double k, double lambda);
};

void to_json(nlohmann::json& j, const BoundSet& b);

}  // namespace rqc

#endif  // RQC_BOUNDS_HPP
