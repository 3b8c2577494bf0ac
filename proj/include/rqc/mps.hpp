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

#ifndef RQC_MPS_HPP
#define RQC_MPS_HPP

#include <cstdint>
#include <vector>

#include "rqc/channel.hpp"
#include "rqc/linalg.hpp"
#include "rqc/spectral.hpp"

namespace rqc {

/// Largest D k^l allowed for dense reduced states.
inline constexpr Index kDefaultMpsBudget = 4096;

/// E(X) = V X V^dagger for V of shape (D k) x D, and more generally
/// (V (x) I_R) X (V (x) I_R)^dagger for X of dimension D R. Register layout:
/// the bond index is the slowest, so an input index b * R + r maps to
/// output indices (a * k + i) * R + r. Each application therefore inserts
/// the new site right after the bond.
Matrix embed_apply(const Matrix& v, const Matrix& x);

/// Partial trace over the leading bond register of dimension `bond`.
Matrix trace_out_bond(const Matrix& rho, Index bond);

double purity(const Matrix& rho);

struct ReducedState {
  int l = 0;
  Matrix matrix;     // E^l(start), dimension D k^l, bond first
  double purity = 0.0;
  double entropy = 0.0;
};

/// rho_l = E^l(start) for a channel sample with d = n = D. Throws
/// std::length_error if D k^l exceeds the budget.
ReducedState embed_power(const ChannelSample& sample, const Matrix& start,
                         int l, Index budget = kDefaultMpsBudget);

struct ReducedDensityResult {
  ReducedState state;
  FixedPoint fixed_point;
};

/// rho_l = E^l(Lambda_Phi) with Lambda from iterating Phi to
/// `fixed_point_tol`. A fixed point that fails to converge is reported in
/// the result; it is not an exception.
ReducedDensityResult reduced_density(const ChannelSample& sample, int l,
                                     double fixed_point_tol = 1e-12,
                                     Index budget = kDefaultMpsBudget);

struct MpsSpec {
  Index bond = 0;        // D
  Index physical = 0;    // k
  int sites = 0;         // l
  long trials = 0;
  int depth = 0;         // t; 0 selects default_depth(D)
  std::uint64_t seed = 0;
  Index budget = kDefaultMpsBudget;

  void validate() const;
};

/// ceil(5 log D), capped at 50.
int default_depth(Index bond);

struct MpsTrial {
  long trial = 0;
  int depth = 0;
  // Physical register (bond traced out), dimension k^l.
  double purity = 0.0;
  double entropy = 0.0;
  double purity_approx = 0.0;        // same for E^l(Phi^t(I/D))
  double entropy_approx = 0.0;
  double max_deviation = 0.0;        // ||rho_phys - I/k^l||_inf
  // Full register including the bond, dimension D k^l.
  double purity_full = 0.0;
  double entropy_full = 0.0;
  double max_deviation_full = 0.0;   // ||rho_l - I/(D k^l)||_inf
  double tv_gap = 0.0;               // ||rho_l - rho~_l||_1 on the full register
  bool fixed_point_converged = false;
  bool invariants_hold = true;       // trace 1 and PSD within 1e-10
};

MpsTrial mps_trial(const MpsSpec& spec, long trial);
std::vector<MpsTrial> mps_purity_experiment(const MpsSpec& spec);

/// tr(A_{i_N} ... A_{i_1}) for 1-based site indices i_j in [k].
Complex mps_amplitude(const std::vector<Matrix>& kraus,
                      const std::vector<int>& indices);

}  // namespace rqc

#endif  // RQC_MPS_HPP
