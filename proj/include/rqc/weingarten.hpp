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

#ifndef RQC_WEINGARTEN_HPP
#define RQC_WEINGARTEN_HPP

#include <cstdint>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "rqc/permutation.hpp"

namespace rqc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Unitary Weingarten function Wg(n, .) on S_p, stored per conjugacy class.
class WeingartenTable {
 public:
  WeingartenTable(int order, std::int64_t dimension,
                  std::map<CycleType, Rational> entries);

  int order() const { return order_; }
  std::int64_t dimension() const { return dimension_; }
  const std::map<CycleType, Rational>& entries() const { return entries_; }

  const Rational& value(const CycleType& type) const;
  const Rational& value(const Permutation& sigma) const {
    return value(sigma.cycle_type());
  }

  /// {order, dimension, entries: [{cycle_type, numerator, denominator}]}.
  /// Numerators and denominators are decimal strings so that arbitrarily
  /// large integers survive the round trip.
  nlohmann::json to_json() const;

 private:
  int order_;
  std::int64_t dimension_;
  std::map<CycleType, Rational> entries_;
};

struct WeingartenOptions {
  /// Largest order accepted. Orders up to 4 use the full |S_p| x |S_p| Gram
  /// system; larger orders (at most 8) use the class-function reduction.
  int max_order = 4;
};

/// Exact Wg(n, .) for S_p. Requires n >= p so the Gram matrix
/// G[s][t] = n^{#(s^-1 t)} is invertible; smaller n is rejected rather than
/// pseudo-inverted.
WeingartenTable weingarten_exact(int p, std::int64_t n,
                                 const WeingartenOptions& options = {});

/// Inverts the full Gram matrix over S_p. p <= 4.
WeingartenTable weingarten_gram(int p, std::int64_t n);
/// Solves the class-function system, one unknown per partition of p.
WeingartenTable weingarten_class_system(int p, std::int64_t n);

/// Leading large-n term n^{-p-|sigma|} Moeb(sigma).
double weingarten_asymptotic(std::int64_t n, const Permutation& sigma);

/// Checks sum_tau Wg(n, sigma^-1 tau) n^{#tau} = [sigma = id] for every sigma
/// in S_p by full enumeration, in exact arithmetic.
bool check_convolution_identity(const WeingartenTable& table);

/// n^e as an exact integer.
BigInt big_pow(std::int64_t base, int exponent);

}  // namespace rqc

#endif  // RQC_WEINGARTEN_HPP
