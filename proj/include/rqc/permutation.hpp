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

#ifndef RQC_PERMUTATION_HPP
#define RQC_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace rqc {

/// Integer partition of p listing the cycle lengths of a permutation in
/// non-increasing order.
struct CycleType {
  std::vector<int> parts;

  int order() const;
  int cycle_count() const { return static_cast<int>(parts.size()); }
  std::string str() const;

  auto operator<=>(const CycleType&) const = default;
  bool operator==(const CycleType&) const = default;
};

/// All partitions of p, each in non-increasing order.
std::vector<CycleType> partitions(int p);

/// Element of the symmetric group S_p.
///
/// The public interface is 1-indexed: points are 1..p and `images[i-1]` is
/// the image of point i. Composition follows function notation,
/// (a * b)(i) = a(b(i)).
class Permutation {
 public:
  /// Identity of S_p.
  explicit Permutation(int degree);
  /// From the 1-indexed image list. Throws std::invalid_argument if the list
  /// is not a bijection of {1, ..., p}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }
  /// Product of the given disjoint cycles, written with 1-indexed points.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int degree, int i, int j);
  /// The cycle (1 2 ... p).
  static Permutation full_cycle(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  /// Image of the 1-indexed point i.
  int operator()(int i) const { return images_.at(i - 1) + 1; }
  std::vector<int> images() const;

  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;

  bool is_identity() const;
  /// #sigma, fixed points included.
  int cycle_count() const;
  /// |sigma| = p - #sigma, the minimal number of transpositions.
  int length() const { return degree() - cycle_count(); }
  CycleType cycle_type() const;
  /// Cycles in 1-indexed notation, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const;
  std::string str() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  /// Dense index into the lexicographic enumeration of S_p.
  std::size_t rank() const;

 private:
  std::vector<int> images_;  // 0-indexed
};

/// Every element of S_p in lexicographic order of the image list.
std::vector<Permutation> all_permutations(int degree);

int cycle_count(const Permutation& sigma);
int length(const Permutation& sigma);

/// Catalan number Cat_m = binom(2m, m) / (m + 1). Exact for m <= 33.
std::int64_t catalan(int m);

/// Moebius function on the non-crossing partition lattice, multiplicative on
/// cycles: an l-cycle contributes (-1)^(l-1) Cat_(l-1).
std::int64_t moebius(const Permutation& sigma);
std::int64_t moebius(const CycleType& type);

}  // namespace rqc

#endif  // RQC_PERMUTATION_HPP
