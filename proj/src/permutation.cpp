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

#include "rqc/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rqc {

int CycleType::order() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string CycleType::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  out << ']';
  return out.str();
}

std::vector<CycleType> partitions(int p) {
  if (p < 0) throw std::invalid_argument("partitions: p must be non-negative");
  std::vector<CycleType> result;
  std::vector<int> current;
  std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
    if (remaining == 0) {
      result.push_back(CycleType{current});
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      recurse(remaining - part, part);
      current.pop_back();
    }
  };
  recurse(p, p);
  return result;
}

Permutation::Permutation(int degree) {
  if (degree < 1) {
    throw std::invalid_argument("Permutation: degree must be positive");
  }
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) {
  if (images.empty()) {
    throw std::invalid_argument("Permutation: degree must be positive");
  }
  const int p = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int& image : images) {
    if (image < 1 || image > p || seen[static_cast<std::size_t>(image - 1)]) {
      throw std::invalid_argument(
          "Permutation: images must be a bijection of {1, ..., p}");
    }
    seen[static_cast<std::size_t>(image - 1)] = true;
    image -= 1;
  }
  images_ = std::move(images);
}

Permutation Permutation::from_cycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > degree || to < 1 || to > degree ||
          used[static_cast<std::size_t>(from - 1)]) {
        throw std::invalid_argument(
            "Permutation::from_cycles: cycles must be disjoint and within "
            "{1, ..., p}");
      }
      used[static_cast<std::size_t>(from - 1)] = true;
      images[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int degree, int i, int j) {
  if (i == j) {
    throw std::invalid_argument("Permutation::transposition: i == j");
  }
  return from_cycles(degree, {{i, j}});
}

Permutation Permutation::full_cycle(int degree) {
  std::vector<int> cycle(static_cast<std::size_t>(degree));
  std::iota(cycle.begin(), cycle.end(), 1);
  return from_cycles(degree, {cycle});
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_);
  for (int& v : out) v += 1;
  return out;
}

Permutation Permutation::inverse() const {
  Permutation inv(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return inv;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) {
    throw std::invalid_argument("Permutation: degree mismatch in product");
  }
  Permutation out(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[i] = images_[static_cast<std::size_t>(rhs.images_[i])];
  }
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int count = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (std::size_t j = start; !seen[j];
         j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
    }
  }
  return count;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (std::size_t j = start; !seen[j];
         j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      cycle.push_back(static_cast<int>(j) + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

CycleType Permutation::cycle_type() const {
  CycleType type;
  for (const auto& cycle : cycles()) {
    type.parts.push_back(static_cast<int>(cycle.size()));
  }
  std::sort(type.parts.begin(), type.parts.end(), std::greater<>());
  return type;
}

std::string Permutation::str() const {
  std::ostringstream out;
  bool any = false;
  for (const auto& cycle : cycles()) {
    if (cycle.size() == 1) continue;
    any = true;
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  if (!any) out << "id";
  return out.str();
}

std::size_t Permutation::rank() const {
  // Lehmer code.
  const std::size_t p = images_.size();
  std::size_t r = 0;
  for (std::size_t i = 0; i < p; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < p; ++j) {
      if (images_[j] < images_[i]) ++smaller;
    }
    r = r * (p - i) + smaller;
  }
  return r;
}

std::vector<Permutation> all_permutations(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

int cycle_count(const Permutation& sigma) { return sigma.cycle_count(); }
int length(const Permutation& sigma) { return sigma.length(); }

std::int64_t catalan(int m) {
  if (m < 0 || m > 33) {
    throw std::out_of_range("catalan: index outside the exact int64 range");
  }
  // Cat_{j+1} = Cat_j * 2(2j+1)/(j+2); the division is exact.
  std::int64_t c = 1;
  for (int j = 0; j < m; ++j) {
    c = c * 2 * (2 * j + 1) / (j + 2);
  }
  return c;
}

std::int64_t moebius(const CycleType& type) {
  std::int64_t value = 1;
  for (int l : type.parts) {
    const std::int64_t sign = (l % 2 == 1) ? 1 : -1;
    value *= sign * catalan(l - 1);
  }
  return value;
}

std::int64_t moebius(const Permutation& sigma) {
  return moebius(sigma.cycle_type());
}

}  // namespace rqc
