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

// Minimal layer library with hand-written backward passes. Every layer caches
// what its backward pass needs from the latest forward call, so a layer
// instance serves one in-flight forward/backward pair at a time.
//
// Weights use the equalized learning-rate parameterization: stored values
// are N(0, 1 / lr_mul^2) and are multiplied by lr_mul / sqrt(fan_in) at use.

#include <string>
#include <vector>

#include "lf/rng.hpp"
#include "lf/tensor.hpp"

namespace lf::nn {

template <typename T>
struct Param {
  std::string name;
  BasicTensor<T> value;
  BasicTensor<T> grad;

  Param() = default;
  Param(std::string n, std::vector<int> shape)
      : name(std::move(n)), value(shape), grad(shape) {}
};

template <typename T>
using ParamList = std::vector<Param<T>*>;

template <typename T>
void zero_grads(const ParamList<T>& params) {
  for (Param<T>* p : params) p->grad.zero();
}

// Copies parameter values between two identically built networks, converting
// the scalar type (used to run float networks in double for gradient checks).
template <typename T, typename U>
void copy_params(const ParamList<U>& src, const ParamList<T>& dst) {
  if (src.size() != dst.size())
    throw DimensionError("copy_params: parameter count mismatch");
  for (std::size_t i = 0; i < src.size(); ++i) {
    require_shape(dst[i]->value, src[i]->value.shape, "copy_params");
    dst[i]->value = BasicTensor<T>::cast(src[i]->value);
  }
}

template <typename T>
class Linear {
 public:
  using Tensor = BasicTensor<T>;

  Linear() = default;
  Linear(const std::string& name, int in, int out, Rng& rng,
         float lr_mul = 1.0f, float bias_init = 0.0f);

  // x: [N, in] -> [N, out]
  Tensor forward(const Tensor& x);
  // Returns dL/dx; accumulates parameter gradients when trainable.
  Tensor backward(const Tensor& dy);

  void collect(ParamList<T>& out) { out.push_back(&weight_); out.push_back(&bias_); }
  void set_trainable(bool t) { trainable_ = t; }
  int in_features() const { return in_; }
  int out_features() const { return out_; }
  Param<T>& weight() { return weight_; }
  Param<T>& bias() { return bias_; }

 private:
  void refresh_effective();

  int in_ = 0, out_ = 0;
  T gain_ = 1, lr_mul_ = 1;
  bool trainable_ = true;
  Param<T> weight_, bias_;
  Tensor w_eff_, b_eff_, x_cache_;
};

// Square-kernel convolution on [C, N, H, W] activations with padding k/2.
template <typename T>
class Conv2d {
 public:
  using Tensor = BasicTensor<T>;

  Conv2d() = default;
  Conv2d(const std::string& name, int cin, int cout, int kernel, int stride,
         Rng& rng);

  Tensor forward(const Tensor& x);
  Tensor backward(const Tensor& dy);

  void collect(ParamList<T>& out) { out.push_back(&weight_); out.push_back(&bias_); }
  void set_trainable(bool t) { trainable_ = t; }
  int out_channels() const { return cout_; }
  Param<T>& weight() { return weight_; }

 private:
  int cin_ = 0, cout_ = 0, kernel_ = 1, stride_ = 1, pad_ = 0;
  T gain_ = 1;
  bool trainable_ = true;
  Param<T> weight_, bias_;
  Tensor w_eff_, col_;
  std::vector<int> in_shape_;
};

// Elementwise activations. The backward variants take the forward input
// (leaky_relu) or output (tanh) that the caller kept.
constexpr double kLeakySlope = 0.2;
template <typename T>
BasicTensor<T> leaky_relu(const BasicTensor<T>& x);
template <typename T>
BasicTensor<T> leaky_relu_backward(const BasicTensor<T>& x, const BasicTensor<T>& dy);
template <typename T>
BasicTensor<T> tanh_forward(const BasicTensor<T>& x);
template <typename T>
BasicTensor<T> tanh_backward(const BasicTensor<T>& y, const BasicTensor<T>& dy);

// Instance normalization followed by per-(sample, channel) affine modulation
// y = xhat * (1 + scale) + shift, with style = [scale | shift] of shape [N, 2C].
template <typename T>
class ModulatedNorm {
 public:
  using Tensor = BasicTensor<T>;

  Tensor forward(const Tensor& x, const Tensor& style);
  // Returns dL/dx; writes dL/dstyle.
  Tensor backward(const Tensor& dy, Tensor& dstyle);

 private:
  static constexpr double kEps = 1e-5;
  Tensor xhat_, style_;
  std::vector<T> inv_std_;
};

// Nearest-neighbour 2x upsampling of [C, N, H, W].
template <typename T>
BasicTensor<T> upsample2x(const BasicTensor<T>& x);
template <typename T>
BasicTensor<T> upsample2x_backward(const BasicTensor<T>& dy);

// [C, N, H, W] -> [N, C]
template <typename T>
BasicTensor<T> global_avg_pool(const BasicTensor<T>& x);
template <typename T>
BasicTensor<T> global_avg_pool_backward(const BasicTensor<T>& dy,
                                        const std::vector<int>& in_shape);

// Layout changes between image batches [N, C, H, W] and activations [C, N, H, W].
template <typename T>
BasicTensor<T> nchw_to_cnhw(const BasicTensor<T>& x);
template <typename T>
BasicTensor<T> cnhw_to_nchw(const BasicTensor<T>& x);

// Scales each row of [N, F] to unit root-mean-square (pixel norm for latents).
template <typename T>
BasicTensor<T> pixel_norm(const BasicTensor<T>& x);
template <typename T>
BasicTensor<T> pixel_norm_backward(const BasicTensor<T>& x, const BasicTensor<T>& dy);

}  // namespace lf::nn
