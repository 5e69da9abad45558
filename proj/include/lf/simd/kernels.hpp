// Copyright 2026 The langfree Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense float kernels behind every network layer. Each kernel has a portable
// scalar reference and, on x86-64, an AVX2/FMA variant. The variant is chosen
// once at startup from CPUID; LF_SIMD=scalar in the environment forces the
// reference path.

#include <cstddef>
#include <string_view>

namespace lf::simd {

struct KernelTable {
  std::string_view name;
  float (*dot)(const float* a, const float* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(float alpha, const float* x, float* y, std::size_t n);
  // C (+)= A * B for row-major A[m,k], B[k,n], C[m,n].
  void (*gemm_nn)(int m, int n, int k, const float* a, int lda, const float* b,
                  int ldb, float* c, int ldc, bool accumulate);
  // C (+)= A * B^T for row-major A[m,k], B[n,k], C[m,n]. Both operands are
  // walked along contiguous k, which suits weight gradients of long batches.
  void (*gemm_nt)(int m, int n, int k, const float* a, int lda, const float* b,
                  int ldb, float* c, int ldc, bool accumulate);
};

const KernelTable& scalar_kernels();
// nullptr when the build or the CPU lacks AVX2+FMA.
const KernelTable* avx2_kernels();

const KernelTable& active();
// Overrides the dispatch choice; used by tests and benchmarks.
void set_active(const KernelTable& table);

inline float dot(const float* a, const float* b, std::size_t n) {
  return active().dot(a, b, n);
}
inline void axpy(float alpha, const float* x, float* y, std::size_t n) {
  active().axpy(alpha, x, y, n);
}

enum class Trans { kNo, kYes };

// General row-major GEMM: C = op(A) * op(B) (+ C when accumulate).
// op(A) is m x k, op(B) is k x n. Transposed operands are packed before the
// NN kernel runs.
void gemm(Trans ta, Trans tb, int m, int n, int k, const float* a, int lda,
          const float* b, int ldb, float* c, int ldc, bool accumulate);

}  // namespace lf::simd
