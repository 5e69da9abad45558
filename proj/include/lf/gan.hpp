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

// Conditional style-based generator and projection-style discriminator.
//
// Generator: z -> mapping MLP -> w. Every synthesis layer l owns three
// transforms: s_l = A_l(w), c_l = C_l(h) (2 FC layers), and
// u_l = U_l([s_l, c_l]), where u_l = [scale | shift] modulates the layer's
// instance-normalized feature map as x * (1 + scale) + shift.
//
// Discriminator: shared conv backbone -> pooled feature r; fd = head_fd(r),
// fs = head_fs(r) in the joint feature space, logit = fd + <h, fs>.

#include <cstdint>
#include <string>
#include <vector>

#include "lf/features.hpp"
#include "lf/image.hpp"
#include "lf/nn.hpp"
#include "lf/rng.hpp"

namespace lf {

struct GanConfig {
  int d = 64;
  int z_dim = 128;
  int w_dim = 128;
  int mapping_layers = 4;
  // Generator channels for the 4, 8, 16 and 32 pixel layers.
  std::vector<int> g_channels = {64, 32, 16, 8};
  // Discriminator channels: fromRGB output, then one per stride-2 block.
  std::vector<int> d_channels = {16, 32, 64, 64, 128};

  int resolution() const { return 4 << (static_cast<int>(g_channels.size()) - 1); }
  void validate() const;
};

// fromRGB 1x1 conv, then stride-2 3x3 conv blocks with leaky ReLU, then
// global average pooling. Input [N, 3, S, S] images, output [N, C_last].
template <typename T>
class ConvBackbone {
 public:
  using Tensor = BasicTensor<T>;

  ConvBackbone() = default;
  ConvBackbone(const std::string& name, const std::vector<int>& channels, Rng& rng);

  Tensor forward(const Tensor& images);
  Tensor backward(const Tensor& dfeat);  // returns dL/dimages

  int out_features() const { return channels_.back(); }
  void collect(nn::ParamList<T>& out);
  void set_trainable(bool t);

 private:
  std::vector<int> channels_;
  nn::Conv2d<T> from_rgb_;
  std::vector<nn::Conv2d<T>> blocks_;
  std::vector<Tensor> pre_;  // pre-activation of each conv
  std::vector<int> last_shape_;
};

// Offsets of each layer's u_l inside the concatenated code [N, sum 2 C_l].
struct StyleLayout {
  std::vector<int> offset;
  std::vector<int> width;  // 2 * C_l
  int total = 0;
};

template <typename T>
class BasicGenerator {
 public:
  using Tensor = BasicTensor<T>;

  BasicGenerator() = default;
  BasicGenerator(const GanConfig& cfg, Rng& rng);

  const GanConfig& config() const { return cfg_; }
  const StyleLayout& layout() const { return layout_; }

  // z [N, z_dim] -> w [N, w_dim]
  Tensor mapping(const Tensor& z);
  // (w [N, w_dim], h [N, d]) -> u [N, layout.total]
  Tensor style_codes(const Tensor& w, const Tensor& h);
  // u -> images [N, 3, R, R] in [-1, 1]
  Tensor synthesize(const Tensor& u);
  Tensor forward(const Tensor& z, const Tensor& h) {
    return synthesize(style_codes(mapping(z), h));
  }
  // Backpropagates dL/dimages through the latest forward() and accumulates
  // parameter gradients. Returns dL/dh.
  Tensor backward(const Tensor& dimages);

  nn::ParamList<T> params();
  // Condition-net parameters only (for ablations and tests).
  nn::ParamList<T> condition_params();

 private:
  struct Layer {
    nn::Linear<T> affine_s;
    nn::Linear<T> cond1, cond2;
    nn::Linear<T> affine_u;
    nn::Conv2d<T> conv;
    nn::ModulatedNorm<T> norm;
    bool upsample = false;
    Tensor cond_pre, conv_in_pre, mod_out;
  };

  GanConfig cfg_;
  StyleLayout layout_;
  std::vector<nn::Linear<T>> mapping_;
  nn::Param<T> const_input_;
  std::vector<Layer> layers_;
  nn::Conv2d<T> to_rgb_;

  Tensor z_cache_;
  std::vector<Tensor> map_pre_;
  Tensor rgb_out_;
  int batch_ = 0;
};

template <typename T>
class BasicDiscriminator {
 public:
  using Tensor = BasicTensor<T>;

  struct Output {
    Tensor logit;  // [N]
    Tensor fd;     // [N]
    Tensor fs;     // [N, d]
  };

  BasicDiscriminator() = default;
  BasicDiscriminator(const GanConfig& cfg, Rng& rng);

  // images [N, 3, R, R], h [N, d]
  Output forward(const Tensor& images, const Tensor& h);
  // dlogit [N] and an extra gradient on fs [N, d] (may be empty). Returns
  // dL/dimages; parameter gradients accumulate when trainable.
  Tensor backward(const Tensor& dlogit, const Tensor& dfs_extra);

  nn::ParamList<T> params();
  void set_trainable(bool t);
  int dim() const { return cfg_.d; }

  // Direct access to the heads (tests plant known weights here).
  nn::Linear<T>& head_fd() { return head_fd_; }
  nn::Linear<T>& head_fs() { return head_fs_; }

 private:
  GanConfig cfg_;
  ConvBackbone<T> backbone_;
  nn::Linear<T> head_fd_, head_fs_;
  Tensor h_cache_;
};

using Generator = BasicGenerator<float>;
using Discriminator = BasicDiscriminator<float>;

// Single-sample wrappers.
Image generate(Generator& g, const UnitFeature& h, const std::vector<double>& z);

struct DiscriminatorResult {
  double logit = 0.0;
  double fd = 0.0;
  FeatureVector fs;
};
DiscriminatorResult discriminate(Discriminator& dnet, const Image& x, const UnitFeature& h);

// Per-element selector over the concatenated u; true picks the second
// condition's code.
struct MixMask {
  std::vector<std::uint8_t> take_b;
};

enum class MixMode { kPerElement, kPerLayer };

// Bernoulli(p) per element (or per layer, broadcast over its elements).
MixMask make_mix_mask(const StyleLayout& layout, double p, std::uint64_t seed,
                      MixMode mode = MixMode::kPerElement);

Image mix_generate(Generator& g, const UnitFeature& h_a, const UnitFeature& h_b,
                   const std::vector<double>& z, const MixMask& mask);

Tensor sample_latents(int n, int z_dim, Rng& rng);
Tensor features_to_tensor(const std::vector<UnitFeature>& feats);

}  // namespace lf
