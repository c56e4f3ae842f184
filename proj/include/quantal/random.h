// Copyright 2026 The Quantal Authors
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

#ifndef QUANTAL_RANDOM_H_
#define QUANTAL_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

// Platform-independent draws on top of std::mt19937_64. The standard
// distributions are implementation-defined, which would break seeded
// reproducibility across standard libraries.
namespace quantal {

using Rng = std::mt19937_64;

// Uniform in [0, 1) from the top 53 bits.
inline double UnitDraw(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [lo, hi]; modulo bias is below 2^-58 for small ranges.
inline int IntDraw(Rng& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

// Uniform point of the probability simplex (Dirichlet with unit
// concentration).
inline std::vector<double> DirichletOnes(Rng& rng, int n) {
  std::vector<double> x(n);
  double sum = 0.0;
  for (double& v : x) {
    v = -std::log1p(-UnitDraw(rng));
    sum += v;
  }
  for (double& v : x) v /= sum;
  return x;
}

}  // namespace quantal

#endif  // QUANTAL_RANDOM_H_
