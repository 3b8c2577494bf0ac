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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rqc/superoperator.hpp"

namespace rqc {
namespace {

// (V (x) I_R) X for X with D R rows.
Matrix left_apply(const Matrix& v, const Matrix& x, Index r) {
  const Index bond = v.cols();
  const Index out_bond = v.rows();
  const Index cols = x.cols();
  Matrix b(bond, r * cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index row = 0; row < bond; ++row) {
      for (Index s = 0; s < r; ++s) b(row, s * cols + j) = x(row * r + s, j);
    }
  }
  const Matrix vb = v * b;
  Matrix out(out_bond * r, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index row = 0; row < out_bond; ++row) {
      for (Index s = 0; s < r; ++s) out(row * r + s, j) = vb(row, s * cols + j);
    }
  }
  return out;
}

double operator_norm_hermitian(const Matrix& x) {
  return hermitian_eigenvalues(x).cwiseAbs().maxCoeff();
}

bool is_state(const Matrix& rho) {
  return std::abs(rho.trace().real() - 1.0) < 1e-10 &&
         hermitian_eigenvalues(rho)(0) >= -1e-10;
}

}  // namespace

Matrix embed_apply(const Matrix& v, const Matrix& x) {
  const Index bond = v.cols();
  if (bond < 1 || v.rows() % bond != 0) {
    throw std::invalid_argument("embed_apply: V must be (D k) x D");
  }
  if (x.rows() != x.cols() || x.rows() % bond != 0) {
    throw std::invalid_argument(
        "embed_apply: X must be square with dimension a multiple of D");
  }
  const Index r = x.rows() / bond;
  const Matrix half = left_apply(v, x, r);
  return left_apply(v, half.adjoint(), r).adjoint();
}

Matrix trace_out_bond(const Matrix& rho, Index bond) {
  if (bond < 1 || rho.rows() % bond != 0 || rho.rows() != rho.cols()) {
    throw std::invalid_argument("trace_out_bond: dimension mismatch");
  }
  const Index r = rho.rows() / bond;
  Matrix out = Matrix::Zero(r, r);
  for (Index b = 0; b < bond; ++b) out += rho.block(b * r, b * r, r, r);
  return out;
}

double purity(const Matrix& rho) { return rho.squaredNorm(); }

ReducedState embed_power(const ChannelSample& sample, const Matrix& start,
                         int l, Index budget) {
  if (sample.d != sample.n) {
    throw std::invalid_argument("embed_power: requires d = n = D");
  }
  if (l < 0) throw std::invalid_argument("embed_power: l >= 0");
  Index dim = sample.d;
  for (int s = 0; s < l; ++s) {
    dim *= sample.k;
    if (dim > budget) {
      throw std::length_error("embed_power: D k^l exceeds the dense budget");
    }
  }
  ReducedState out;
  out.l = l;
  out.matrix = start;
  for (int s = 0; s < l; ++s) out.matrix = embed_apply(sample.isometry, out.matrix);
  out.purity = purity(out.matrix);
  out.entropy = von_neumann_entropy(out.matrix, 1e-10);
  return out;
}

ReducedDensityResult reduced_density(const ChannelSample& sample, int l,
                                     double fixed_point_tol, Index budget) {
  const SuperOperator op(sample.kraus, Representation::kMatrixFree);
  FixedPointOptions options;
  options.tol = fixed_point_tol;
  ReducedDensityResult out;
  out.fixed_point = fixed_point(op, options);
  out.state = embed_power(sample, out.fixed_point.state, l, budget);
  return out;
}

void MpsSpec::validate() const {
  if (bond < 1 || physical < 1) {
    throw std::invalid_argument("mps: D and k must be >= 1");
  }
  if (sites < 1) throw std::invalid_argument("mps: l must be >= 1");
  if (trials < 1) throw std::invalid_argument("mps: trials must be >= 1");
  if (depth < 0) throw std::invalid_argument("mps: t must be >= 0");
  Index dim = bond;
  for (int s = 0; s < sites; ++s) {
    dim *= physical;
    if (dim > budget) {
      throw std::invalid_argument("mps: D k^l exceeds the dense budget " +
                                  std::to_string(budget));
    }
  }
}

int default_depth(Index bond) {
  const double t = std::ceil(5.0 * std::log(static_cast<double>(bond)));
  return static_cast<int>(std::clamp(t, 1.0, 50.0));
}

MpsTrial mps_trial(const MpsSpec& spec, long trial) {
  spec.validate();
  Rng rng = make_stream(spec.seed, static_cast<std::uint64_t>(trial));
  const ChannelSample sample =
      ChannelSample::draw(spec.bond, spec.bond, spec.physical, rng);
  const SuperOperator op(sample.kraus, Representation::kMatrixFree);

  MpsTrial out;
  out.trial = trial;
  out.depth = spec.depth > 0 ? spec.depth : default_depth(spec.bond);

  const FixedPoint fp = fixed_point(op);
  out.fixed_point_converged = fp.converged;
  Matrix approx =
      Matrix::Identity(spec.bond, spec.bond) / static_cast<double>(spec.bond);
  for (int t = 0; t < out.depth; ++t) approx = op.channel_hermitian(approx);

  const ReducedState exact = embed_power(sample, fp.state, spec.sites, spec.budget);
  const ReducedState tilde = embed_power(sample, approx, spec.sites, spec.budget);
  const Index full_dim = exact.matrix.rows();
  const Index phys_dim = full_dim / spec.bond;

  out.purity_full = exact.purity;
  out.entropy_full = exact.entropy;
  out.max_deviation_full = operator_norm_hermitian(
      exact.matrix -
      Matrix::Identity(full_dim, full_dim) / static_cast<double>(full_dim));
  out.tv_gap = trace_norm_hermitian(exact.matrix - tilde.matrix);

  const Matrix phys = trace_out_bond(exact.matrix, spec.bond);
  const Matrix phys_tilde = trace_out_bond(tilde.matrix, spec.bond);
  out.purity = purity(phys);
  out.entropy = von_neumann_entropy(phys, 1e-10);
  out.purity_approx = purity(phys_tilde);
  out.entropy_approx = von_neumann_entropy(phys_tilde, 1e-10);
  out.max_deviation = operator_norm_hermitian(
      phys - Matrix::Identity(phys_dim, phys_dim) / static_cast<double>(phys_dim));
  out.invariants_hold = is_state(exact.matrix) && is_state(phys) &&
                        isometry_residual(sample.isometry) < 1e-12;
  return out;
}

std::vector<MpsTrial> mps_purity_experiment(const MpsSpec& spec) {
  spec.validate();
  std::vector<MpsTrial> out;
  out.reserve(static_cast<std::size_t>(spec.trials));
  for (long t = 0; t < spec.trials; ++t) out.push_back(mps_trial(spec, t));
  return out;
}

Complex mps_amplitude(const std::vector<Matrix>& kraus,
                      const std::vector<int>& indices) {
  if (kraus.empty()) throw std::invalid_argument("mps_amplitude: no tensors");
  const Index bond = kraus.front().rows();
  if (kraus.front().cols() != bond) {
    throw std::invalid_argument("mps_amplitude: tensors must be square");
  }
  const int k = static_cast<int>(kraus.size());
  Matrix product = Matrix::Identity(bond, bond);
  // Leftmost factor is the last site: product = A_{i_N} ... A_{i_1}.
  for (int idx : indices) {
    if (idx < 1 || idx > k) {
      throw std::out_of_range("mps_amplitude: site index outside [1, k]");
    }
    product = kraus[static_cast<std::size_t>(idx - 1)] * product;
  }
  return product.trace();
}

}  // namespace rqc
