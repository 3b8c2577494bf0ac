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
#include <string>
#include <utility>
#include <vector>

namespace rqc {
namespace {

constexpr int kGramMaxOrder = 4;
constexpr int kHardMaxOrder = 8;

using RationalMatrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan elimination in exact arithmetic. Throws if singular.
std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t m = a.size();
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) {
      throw std::domain_error("Weingarten: Gram matrix is singular");
    }
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < m; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < m; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t j = col; j < m; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  return b;
}

void check_arguments(int p, std::int64_t n) {
  if (p < 1) throw std::invalid_argument("Weingarten: order must be >= 1");
  if (n < 1) throw std::invalid_argument("Weingarten: dimension must be >= 1");
  if (n < p) {
    throw std::domain_error(
        "Weingarten: Gram matrix may be singular for dimension " +
        std::to_string(n) + " < order " + std::to_string(p));
  }
}

}  // namespace

BigInt big_pow(std::int64_t base, int exponent) {
  BigInt result = 1;
  const BigInt b = base;
  for (int i = 0; i < exponent; ++i) result *= b;
  return result;
}

WeingartenTable::WeingartenTable(int order, std::int64_t dimension,
                                 std::map<CycleType, Rational> entries)
    : order_(order), dimension_(dimension), entries_(std::move(entries)) {}

const Rational& WeingartenTable::value(const CycleType& type) const {
  auto it = entries_.find(type);
  if (it == entries_.end()) {
    throw std::out_of_range("WeingartenTable: no entry for cycle type " +
                            type.str());
  }
  return it->second;
}

nlohmann::json WeingartenTable::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [type, value] : entries_) {
    entries.push_back({{"cycle_type", type.parts},
                       {"numerator", numerator(value).str()},
                       {"denominator", denominator(value).str()}});
  }
  return {{"order", order_}, {"dimension", dimension_}, {"entries", entries}};
}

WeingartenTable weingarten_gram(int p, std::int64_t n) {
  check_arguments(p, n);
  if (p > kGramMaxOrder) {
    throw std::out_of_range("weingarten_gram: order too large (p > 4)");
  }
  const auto perms = all_permutations(p);
  const std::size_t m = perms.size();
  std::vector<BigInt> powers(static_cast<std::size_t>(p) + 1);
  for (int e = 0; e <= p; ++e) powers[static_cast<std::size_t>(e)] = big_pow(n, e);

  // sum_rho Wg(rho) n^{#(sigma rho)} = [sigma = id], from the convolution
  // identity after substituting rho = sigma^-1 tau.
  RationalMatrix gram(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      gram[i][j] = Rational(
          powers[static_cast<std::size_t>((perms[i] * perms[j]).cycle_count())]);
    }
  }
  std::vector<Rational> rhs(m, Rational(0));
  rhs[0] = 1;  // lexicographic enumeration starts at the identity
  const auto solution = solve_exact(std::move(gram), std::move(rhs));

  std::map<CycleType, Rational> entries;
  for (std::size_t i = 0; i < m; ++i) {
    const auto type = perms[i].cycle_type();
    auto [it, inserted] = entries.emplace(type, solution[i]);
    if (!inserted && it->second != solution[i]) {
      throw std::logic_error("weingarten_gram: solution is not a class function");
    }
  }
  return WeingartenTable(p, n, std::move(entries));
}

WeingartenTable weingarten_class_system(int p, std::int64_t n) {
  check_arguments(p, n);
  if (p > kHardMaxOrder) {
    throw std::out_of_range("weingarten_class_system: order too large (p > 8)");
  }
  const auto classes = partitions(p);
  std::map<CycleType, std::size_t> class_index;
  for (std::size_t c = 0; c < classes.size(); ++c) class_index[classes[c]] = c;

  std::vector<Permutation> representatives;
  for (const auto& type : classes) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int part : type.parts) {
      std::vector<int> cycle;
      for (int i = 0; i < part; ++i) cycle.push_back(next++);
      cycles.push_back(std::move(cycle));
    }
    representatives.push_back(Permutation::from_cycles(p, cycles));
  }

  // Row c: sum_rho Wg(class(rho)) n^{#(sigma_c rho)} = [c is the identity].
  std::vector<std::vector<BigInt>> counts(
      classes.size(), std::vector<BigInt>(classes.size(), BigInt(0)));
  std::vector<BigInt> powers(static_cast<std::size_t>(p) + 1);
  for (int e = 0; e <= p; ++e) powers[static_cast<std::size_t>(e)] = big_pow(n, e);
  const auto perms = all_permutations(p);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const auto& rho : perms) {
      const std::size_t col = class_index.at(rho.cycle_type());
      counts[c][col] += powers[static_cast<std::size_t>(
          (representatives[c] * rho).cycle_count())];
    }
  }
  RationalMatrix system(classes.size(), std::vector<Rational>(classes.size()));
  std::vector<Rational> rhs(classes.size(), Rational(0));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t col = 0; col < classes.size(); ++col) {
      system[c][col] = Rational(counts[c][col]);
    }
    if (representatives[c].is_identity()) rhs[c] = 1;
  }
  const auto solution = solve_exact(std::move(system), std::move(rhs));
  std::map<CycleType, Rational> entries;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    entries.emplace(classes[c], solution[c]);
  }
  return WeingartenTable(p, n, std::move(entries));
}

WeingartenTable weingarten_exact(int p, std::int64_t n,
                                 const WeingartenOptions& options) {
  check_arguments(p, n);
  if (p > options.max_order || p > kHardMaxOrder) {
    throw std::out_of_range("weingarten_exact: order too large (p = " +
                            std::to_string(p) + ", cap " +
                            std::to_string(options.max_order) + ")");
  }
  if (p <= kGramMaxOrder) return weingarten_gram(p, n);
  return weingarten_class_system(p, n);
}

double weingarten_asymptotic(std::int64_t n, const Permutation& sigma) {
  if (n < 1) {
    throw std::invalid_argument("weingarten_asymptotic: n must be positive");
  }
  const double exponent = -static_cast<double>(sigma.degree() + sigma.length());
  return std::pow(static_cast<double>(n), exponent) *
         static_cast<double>(moebius(sigma));
}

bool check_convolution_identity(const WeingartenTable& table) {
  const int p = table.order();
  const auto perms = all_permutations(p);
  std::vector<BigInt> powers(static_cast<std::size_t>(p) + 1);
  for (int e = 0; e <= p; ++e) {
    powers[static_cast<std::size_t>(e)] = big_pow(table.dimension(), e);
  }
  for (const auto& sigma : perms) {
    const Permutation sigma_inv = sigma.inverse();
    Rational sum = 0;
    for (const auto& tau : perms) {
      sum += table.value(sigma_inv * tau) *
             powers[static_cast<std::size_t>(tau.cycle_count())];
    }
    const Rational expected = sigma.is_identity() ? 1 : 0;
    if (sum != expected) return false;
  }
  return true;
}

}  // namespace rqc
