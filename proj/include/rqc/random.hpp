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

#ifndef RQC_RANDOM_HPP
#define RQC_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace rqc {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of the private stream owned by one Monte Carlo trial. Distinct
/// (master, stream) pairs give decorrelated engines; equal pairs give
/// bit-identical sequences.
std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t stream);

inline Rng make_stream(std::uint64_t master_seed, std::uint64_t stream) {
  return Rng(stream_seed(master_seed, stream));
}

/// Centered complex Gaussian with E|z|^2 = variance (each of the real and
/// imaginary parts has variance variance / 2).
std::complex<double> complex_gaussian(Rng& rng, double variance);

}  // namespace rqc

#endif  // RQC_RANDOM_HPP
