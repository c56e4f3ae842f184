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

#include "quantal/kernels.h"

#include <omp.h>

#include <algorithm>

namespace quantal::kernels {
namespace {

// out[c] for c in [begin, end).
void VecMatColumns(std::span<const double> v, std::span<const double> m,
                   int rows, int cols, int begin, int end,
                   std::span<double> out) {
  std::fill(out.begin() + begin, out.begin() + end, 0.0);
  for (int r = 0; r < rows; ++r) {
    const double* row = m.data() + static_cast<long>(r) * cols;
    const double w = v[r];
    for (int c = begin; c < end; ++c) out[c] += w * row[c];
  }
}

}  // namespace

namespace serial {

void MatVec(std::span<const double> m, int rows, int cols,
            std::span<const double> v, std::span<double> out) {
  for (int r = 0; r < rows; ++r) {
    const double* row = m.data() + static_cast<long>(r) * cols;
    double acc = 0.0;
    for (int c = 0; c < cols; ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
}

// Row-major sweep; each out[c] still sums over r in ascending order.
void VecMat(std::span<const double> v, std::span<const double> m, int rows,
            int cols, std::span<double> out) {
  VecMatColumns(v, m, rows, cols, 0, cols, out);
}

}  // namespace serial

namespace parallel {

void MatVec(std::span<const double> m, int rows, int cols,
            std::span<const double> v, std::span<double> out) {
#pragma omp parallel for schedule(static)
  for (int r = 0; r < rows; ++r) {
    const double* row = m.data() + static_cast<long>(r) * cols;
    double acc = 0.0;
    for (int c = 0; c < cols; ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
}

void VecMat(std::span<const double> v, std::span<const double> m, int rows,
            int cols, std::span<double> out) {
  constexpr int kBlock = 256;
  const int blocks = (cols + kBlock - 1) / kBlock;
#pragma omp parallel for schedule(static)
  for (int b = 0; b < blocks; ++b) {
    VecMatColumns(v, m, rows, cols, b * kBlock,
                  std::min(cols, (b + 1) * kBlock), out);
  }
}

}  // namespace parallel

namespace {
bool UseParallel(int rows, int cols) {
  return static_cast<long>(rows) * cols >= kParallelThreshold &&
         !omp_in_parallel() && omp_get_max_threads() > 1;
}
}  // namespace

void MatVec(std::span<const double> m, int rows, int cols,
            std::span<const double> v, std::span<double> out) {
  if (UseParallel(rows, cols)) {
    parallel::MatVec(m, rows, cols, v, out);
  } else {
    serial::MatVec(m, rows, cols, v, out);
  }
}

void VecMat(std::span<const double> v, std::span<const double> m, int rows,
            int cols, std::span<double> out) {
  if (UseParallel(rows, cols)) {
    parallel::VecMat(v, m, rows, cols, out);
  } else {
    serial::VecMat(v, m, rows, cols, out);
  }
}

}  // namespace quantal::kernels
