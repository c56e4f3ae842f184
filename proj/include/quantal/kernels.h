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

#ifndef QUANTAL_KERNELS_H_
#define QUANTAL_KERNELS_H_

#include <span>

// Dense matrix-vector kernels behind the normal-form solvers. `serial` is the
// reference implementation; `parallel` splits the output index across OpenMP
// threads. Every output entry is accumulated in the same order in both, so
// results are bitwise identical regardless of thread count.
namespace quantal::kernels {

namespace serial {
// out[r] = sum_c m[r, c] * v[c]
void MatVec(std::span<const double> m, int rows, int cols,
            std::span<const double> v, std::span<double> out);
// out[c] = sum_r v[r] * m[r, c]
void VecMat(std::span<const double> v, std::span<const double> m, int rows,
            int cols, std::span<double> out);
}  // namespace serial

namespace parallel {
void MatVec(std::span<const double> m, int rows, int cols,
            std::span<const double> v, std::span<double> out);
void VecMat(std::span<const double> v, std::span<const double> m, int rows,
            int cols, std::span<double> out);
}  // namespace parallel

// Below this many matrix entries the dispatching versions stay serial.
inline constexpr long kParallelThreshold = 1L << 16;

void MatVec(std::span<const double> m, int rows, int cols,
            std::span<const double> v, std::span<double> out);
void VecMat(std::span<const double> v, std::span<const double> m, int rows,
            int cols, std::span<double> out);

}  // namespace quantal::kernels

#endif  // QUANTAL_KERNELS_H_
