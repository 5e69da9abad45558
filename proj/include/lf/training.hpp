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

// Adversarial training loop: conditions come from pseudo text features
// (language-free), caption features (supervised) or a fixed per-image mix of
// both (semi-supervised).

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lf/encoders.hpp"
#include "lf/features.hpp"
#include "lf/gan.hpp"
#include "lf/losses.hpp"
#include "lf/optim.hpp"
#include "lf/pseudo.hpp"
#include "lf/toyset.hpp"

namespace lf {

enum class TrainMode { kLanguageFreeFixed, kLanguageFreeTrainable, kSupervised, kSemiSupervised };

std::string mode_name(TrainMode m);
TrainMode parse_mode(const std::string& s);

struct TrainConfig {
  TrainMode mode = TrainMode::kLanguageFreeFixed;
  double pair_fraction = 0.0;  // semi-supervised only
  int batch = 64;
  int steps = 2000;
  double lr_g = 2.5e-3;
  double lr_d = 2.5e-3;
  double beta1 = 0.0;
  double beta2 = 0.99;
  LossWeights weights;
  FixedPerturbSpec perturb;
  // Random-crop side range for the generator's contrastive path.
  int contrastive_crop = 24;
  std::uint64_t seed = 0;
  int checkpoint_every = 0;  // 0: only the final checkpoint
  int log_every = 10;
  GanConfig gan;

  void validate() const;
  nlohmann::json to_json() const;
  // Missing keys keep their defaults; unknown keys raise ConfigError.
  static TrainConfig from_json(const nlohmann::json& j);
};

// Everything a run reads besides the config. Row i of image_features is the
// feature of dataset image i. The caption encoder is only consulted for rows
// that train with captions.
struct TrainData {
  const ToyDataset* dataset = nullptr;
  FeatureStore image_features;
  EncoderPair text;
  PixelEncoder* image_encoder = nullptr;  // differentiable f_img for L_ConG
  InferenceModel* inference = nullptr;    // language_free_trainable only
};

struct StepReport {
  std::int64_t step = 0;
  double lg = 0.0, ld = 0.0;
  double lcon_d = 0.0;       // discriminator features of real images
  double lcon_d_fake = 0.0;  // discriminator features of generated images (G update)
  double lcon_g = 0.0;
  double total_g = 0.0, total_d = 0.0;

  nlohmann::json to_json() const;
};

class Trainer {
 public:
  Trainer(const TrainConfig& cfg, TrainData data);
  Trainer(const Trainer&) = delete;
  Trainer& operator=(const Trainer&) = delete;

  const TrainConfig& config() const { return cfg_; }
  std::int64_t step_count() const { return step_; }
  Generator& generator() { return g_; }
  Discriminator& discriminator() { return d_; }
  const std::vector<std::uint8_t>& captioned() const { return captioned_; }

  // Conditions for the given rows, consuming one noise row per index from
  // rng whether or not the row uses it.
  Tensor conditions(const std::vector<std::size_t>& rows, Rng& rng);

  // One D update followed by one G update on a freshly sampled batch.
  StepReport step();
  // Runs until step_count() == cfg.steps, logging JSON lines to `metrics`
  // and writing checkpoints into `out_dir` (when non-empty) at the cadence.
  void run(std::ostream* metrics, const std::filesystem::path& out_dir = {});

  // Full state: parameters, optimizer moments, RNG stream, step counter.
  Archive checkpoint() const;
  void save(const std::filesystem::path& path) const;
  // resume = true restores everything; otherwise only network parameters
  // (fine-tuning), keeping fresh optimizers and step 0.
  void load(const Archive& ar, bool resume);

 private:
  TrainConfig cfg_;
  TrainData data_;
  Generator g_;
  Discriminator d_;
  nn::Adam opt_g_, opt_d_;
  Rng rng_;
  std::int64_t step_ = 0;
  std::vector<std::uint8_t> captioned_;
  std::vector<std::optional<FeatureVector>> text_cache_;
};

// Reads the architecture config stored in a checkpoint.
GanConfig checkpoint_gan_config(const Archive& ar);
// Loads generator parameters from a checkpoint into a fresh generator.
void load_generator(Generator& g, const Archive& ar);

}  // namespace lf
