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

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "lf/error.hpp"

namespace lf {

inline std::string shape_str(const std::vector<int>& shape) {
  std::string s = "[";
  for (std::size_t i = 0; i < shape.size(); ++i)
    s += (i ? "," : "") + std::to_string(shape[i]);
  return s + "]";
}

// Dense array with a runtime shape. Layout conventions are owned by the code
// using it: fully-connected activations are [N, F]; convolutional activations
// are channel-major [C, N, H, W] so a convolution is one GEMM over the whole
// batch. Training runs in float; double instantiations back the
// finite-difference gradient checks.
template <typename T>
struct BasicTensor {
  using value_type = T;
  std::vector<int> shape;
  std::vector<T> data;

  BasicTensor() = default;
  explicit BasicTensor(std::vector<int> s, T fill = T(0))
      : shape(std::move(s)), data(count(shape), fill) {}
  BasicTensor(std::initializer_list<int> s) : BasicTensor(std::vector<int>(s)) {}

  template <typename U>
  static BasicTensor cast(const BasicTensor<U>& o) {
    BasicTensor t;
    t.shape = o.shape;
    t.data.assign(o.data.begin(), o.data.end());
    return t;
  }

  static std::size_t count(const std::vector<int>& s) {
    return std::accumulate(s.begin(), s.end(), std::size_t{1},
                           [](std::size_t a, int b) {
                             return a * static_cast<std::size_t>(b);
                           });
  }

  std::size_t size() const { return data.size(); }
  int dim(std::size_t i) const { return shape.at(i); }
  T* ptr() { return data.data(); }
  const T* ptr() const { return data.data(); }
  std::span<T> span() { return data; }
  std::span<const T> span() const { return data; }
  T& operator[](std::size_t i) { return data[i]; }
  T operator[](std::size_t i) const { return data[i]; }

  void resize(std::vector<int> s) {
    shape = std::move(s);
    data.assign(count(shape), T(0));
  }
  void zero() { std::fill(data.begin(), data.end(), T(0)); }
  std::string shape_str() const { return lf::shape_str(shape); }
};

using Tensor = BasicTensor<float>;
using TensorD = BasicTensor<double>;

template <typename T>
void require_shape(const BasicTensor<T>& t, const std::vector<int>& s,
                   const char* what) {
  if (t.shape != s)
    throw DimensionError(std::string(what) + ": expected shape " + shape_str(s) +
                         ", got " + t.shape_str());
}

}  // namespace lf
