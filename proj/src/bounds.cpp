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

#include <nlohmann/json.hpp>

#include "rqc/quadrature.hpp"

namespace rqc {
namespace {

void check_c(double c) {
  if (!(c >= 1.0)) {
    throw std::domain_error("Marchenko-Pastur parameter must satisfy c >= 1");
  }
}

void check_lambda(double k, double lambda) {
  if (!(k >= 1.0)) throw std::domain_error("bounds: k must be >= 1");
  if (!(lambda > 0.0 && lambda < k)) {
    throw std::domain_error("bounds: lambda must lie in (0, k)");
  }
}

}  // namespace

MpSupport mp_support(double c) {
  check_c(c);
  const double r = std::sqrt(c);
  return {(r - 1.0) * (r - 1.0), (r + 1.0) * (r + 1.0)};
}

double mp_density(double c, double x) {
  const MpSupport s = mp_support(c);
  if (x <= s.a || x >= s.b || x <= 0.0) return 0.0;
  return std::sqrt((s.b - x) * (x - s.a)) / (2.0 * std::numbers::pi * x);
}

double mp_integral(double c, const std::function<double(double)>& g,
                   double tol) {
  const MpSupport s = mp_support(c);
  const double width = s.b - s.a;
  // dMP = (b - a)^2 sin^2 cos^2 / (pi x) dtheta after the substitution.
  const auto integrand = [&](double theta) {
    const double sn = std::sin(theta);
    const double cs = std::cos(theta);
    const double x = s.a + width * sn * sn;
    if (x <= 0.0) {
      // Only reachable for c = 1 at theta = 0, where sin^2 / x -> 1 / b.
      return width * width * cs * cs / (std::numbers::pi * s.b) * g(0.0);
    }
    return width * width * sn * sn * cs * cs / (std::numbers::pi * x) * g(x);
  };
  const QuadratureResult r =
      integrate(integrand, 0.0, std::numbers::pi / 2.0, tol);
  if (!r.converged) {
    throw std::runtime_error("mp_integral: quadrature did not converge");
  }
  return r.value;
}

double chi_limit(double c) {
  check_c(c);
  const double root_moment =
      mp_integral(c, [](double x) { return std::sqrt(x); });
  return root_moment * root_moment / c;
}

double chi_finite_floor(long n) {
  if (n < 1) throw std::domain_error("chi_finite_floor: N >= 1");
  return 1.0 / static_cast<double>(n + 1);
}

double g_bound(double k, double lambda) {
  check_lambda(k, lambda);
  const double s = 1.0 + std::sqrt(lambda);
  return 2.0 * s * s / (chi_limit(k / lambda) * std::sqrt(k));
}

double overlap_root(double k, double lambda) {
  return std::sqrt(lambda + 1.0 / k - lambda / (k * k));
}

double sv_gap_lower(double k, double lambda) {
  return overlap_root(k, lambda) - g_bound(k, lambda);
}

double sv_gap_upper(double k, double lambda) {
  return overlap_root(k, lambda) + g_bound(k, lambda);
}

double explicit_sv_gap_lower(double k, double lambda) {
  check_lambda(k, lambda);
  const double s = 1.0 + std::sqrt(lambda);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return overlap_root(k, lambda) - 9.0 * pi2 * s * s / (32.0 * std::sqrt(k));
}

double ev2_upper(double k) {
  const double g = g_bound(k, 1.0);
  return (std::sqrt(1.0 + (k - 1.0) / (k * k)) + g) * g;
}

double threshold(const std::function<double(double)>& bound, double target,
                 double lo, double hi, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("threshold: need lo < hi");
  double f_lo = bound(lo) - target;
  const double f_hi = bound(hi) - target;
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw std::invalid_argument("threshold: no sign change in bracket");
  }
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = bound(mid) - target;
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

BoundSet BoundSet::evaluate(double k, double lambda) {
  BoundSet b;
  b.k = k;
  b.lambda = lambda;
  b.g = g_bound(k, lambda);
  b.chi = chi_limit(k / lambda);
  const double root = overlap_root(k, lambda);
  b.sv_gap_lb = root - b.g;
  b.sv_gap_ub = root + b.g;
  if (lambda == 1.0) b.ev2_ub = (std::sqrt(1.0 + (k - 1.0) / (k * k)) + b.g) * b.g;
  b.explicit_lb = explicit_sv_gap_lower(k, lambda);
  return b;
}

void to_json(nlohmann::json& j, const BoundSet& b) {
  j = nlohmann::json{{"k", b.k},
                     {"lambda", b.lambda},
                     {"chi", b.chi},
                     {"g", b.g},
                     {"sv_gap_lb", b.sv_gap_lb},
                     {"sv_gap_ub", b.sv_gap_ub},
                     {"explicit_lb", b.explicit_lb}};
  j["ev2_ub"] = b.ev2_ub ? nlohmann::json(*b.ev2_ub) : nlohmann::json(nullptr);
}

}  // namespace rqc
