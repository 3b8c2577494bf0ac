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

#ifndef RQC_QUADRATURE_HPP
#define RQC_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace rqc {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// Gauss-Legendre rule of the given order (Newton iteration on P_order).
GaussRule gauss_legendre(int order);

struct QuadratureResult {
  double value = 0.0;
  double change = 0.0;   // |I_order - I_{order/2}| at exit
  int order = 0;
  bool converged = false;
};

/// Gauss-Legendre on [lo, hi], doubling the order from `start_order` until
/// two successive values differ by less than `tol`.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double tol = 1e-10, int start_order = 16,
                           int max_order = 4096);

}  // namespace rqc

#endif  // RQC_QUADRATURE_HPP
