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

// Pixel-reading networks trained on the toy set: an image encoder into the
// joint feature space (its pooled penultimate activations double as the FID
// feature extractor), a bag-of-words caption encoder, and the attribute probe
// classifier used for conditional accuracy and the Inception-Score analogue.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lf/archive.hpp"
#include "lf/features.hpp"
#include "lf/gan.hpp"
#include "lf/toyset.hpp"

namespace lf {

inline const std::vector<int> kEncoderChannels = {16, 32, 64, 64};

template <typename T>
class BasicPixelEncoder {
 public:
  using Tensor = BasicTensor<T>;

  BasicPixelEncoder() = default;
  BasicPixelEncoder(int d, Rng& rng, const std::vector<int>& channels = kEncoderChannels);

  int dim() const { return d_; }
  int eval_dim() const { return backbone_.out_features(); }

  // images [N, 3, S, S] -> [N, d]
  Tensor forward(const Tensor& images);
  Tensor backward(const Tensor& dout);  // returns dL/dimages
  // Pooled penultimate activations [N, eval_dim]; no cache kept for backward.
  Tensor penultimate(const Tensor& images);

  nn::ParamList<T> params();
  void set_trainable(bool t);

 private:
  int d_ = 0;
  ConvBackbone<T> backbone_;
  nn::Linear<T> head_;
};

using PixelEncoder = BasicPixelEncoder<float>;

// Mean of learned word embeddings over the caption's tokens.
class TextEncoder {
 public:
  TextEncoder() = default;
  TextEncoder(int d, Rng& rng);

  int dim() const { return d_; }
  // Token ids; unknown words raise DataError.
  std::vector<int> tokenize(std::string_view caption) const;
  // captions -> [N, d]
  Tensor forward(const std::vector<std::string>& captions);
  void backward(const Tensor& dout);

  nn::ParamList<float> params() { return {&table_}; }

 private:
  int d_ = 0;
  std::map<std::string, int, std::less<>> vocab_;
  nn::Param<float> table_;
  std::vector<std::vector<int>> tokens_;
};

// Three softmax heads (shape, color, size) over a conv backbone.
class ProbeClassifier {
 public:
  ProbeClassifier() = default;
  explicit ProbeClassifier(Rng& rng);

  // images -> logits [N, 14] (shape | color | size blocks)
  Tensor forward(const Tensor& images);
  void backward(const Tensor& dlogits);

  // Argmax per attribute.
  std::vector<Attributes> predict(const Tensor& images);
  // Joint distribution over the 64 attribute tuples (product of the three
  // heads), rows indexed by Attributes::index().
  std::vector<std::vector<double>> joint_probabilities(const Tensor& images);

  nn::ParamList<float> params();

 private:
  ConvBackbone<float> backbone_;
  nn::Linear<float> head_;
};

// Softmax cross-entropy over the three heads, summed per sample and averaged
// over the batch; writes dL/dlogits.
double probe_loss(const Tensor& logits, const std::vector<Attributes>& labels, Tensor* grad);

struct EncoderTrainConfig {
  int steps = 1500;
  int batch = 64;
  double lr = 2e-2;
  int min_crop = 24;  // crops with sides in [min_crop, S] resized back to S
  std::uint64_t seed = 0;
};

// Random-crop augmentation of an image batch (one window per image).
Tensor random_crops(const Tensor& images, int min_crop, Rng& rng);

// Trains the pixel encoder to reproduce target features (cosine regression),
// e.g. the oracle embeddings of the training images. Returns the final mean
// cosine similarity on the last batch.
double train_pixel_encoder(PixelEncoder& enc, const ToyDataset& data,
                           const std::vector<FeatureVector>& targets,
                           const EncoderTrainConfig& cfg);

// Symmetric contrastive training of an image/text encoder pair on captions.
double train_encoder_pair(PixelEncoder& img, TextEncoder& txt, const ToyDataset& data,
                          const EncoderTrainConfig& cfg, double tau = 0.1);

// Trains the probe on the dataset's attribute labels; returns training-set
// accuracy on the final batch (mean over the three attributes).
double train_probe(ProbeClassifier& probe, const ToyDataset& data,
                   const EncoderTrainConfig& cfg);

// EncoderPair backed by trained networks (image side through the pixel
// encoder, text side through the caption encoder).
EncoderPair trained_encoders(PixelEncoder& img, TextEncoder& txt);

void save_module(const nn::ParamList<float>& params, const std::filesystem::path& path,
                 const std::string& kind, const std::string& meta_json = "{}");
void load_module(const nn::ParamList<float>& params, const std::filesystem::path& path,
                 const std::string& kind);

}  // namespace lf
