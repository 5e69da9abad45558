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

// Procedural image-caption dataset: one coloured shape on a grey background,
// captioned "a {size} {color} {shape}".

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lf/features.hpp"
#include "lf/image.hpp"

namespace lf {

inline constexpr int kToyImageSide = 32;

struct ToySample {
  Image image;
  Attributes attributes;
  std::string caption;
  std::uint64_t seed = 0;
};

// Deterministic rendering; the seed only moves the shape around.
Image render_toy(const Attributes& a, std::uint64_t seed, int side = kToyImageSide);
ToySample make_toy_sample(const Attributes& a, std::uint64_t seed);

// Sample container that counts caption reads, so training code can be shown
// never to touch captions in language-free mode.
class ToyDataset {
 public:
  void add(ToySample s) { samples_.push_back(std::move(s)); }
  std::size_t size() const { return samples_.size(); }
  const Image& image(std::size_t i) const { return samples_.at(i).image; }
  const Attributes& attributes(std::size_t i) const { return samples_.at(i).attributes; }
  std::uint64_t seed(std::size_t i) const { return samples_.at(i).seed; }
  const std::string& caption(std::size_t i) const {
    ++caption_reads_;
    return samples_.at(i).caption;
  }
  std::size_t caption_reads() const { return caption_reads_; }
  // Uncounted access for serialization and tests.
  const ToySample& sample(std::size_t i) const { return samples_.at(i); }

 private:
  std::vector<ToySample> samples_;
  mutable std::size_t caption_reads_ = 0;
};

// n samples with i.i.d. uniform attributes; sample i uses a seed derived
// from (seed, i).
ToyDataset gen_dataset(std::size_t n, std::uint64_t seed);

// Writes <dir>/NNNNNN.png plus <dir>/manifest.jsonl with
// {"file", "shape", "color", "size", "caption"} per line.
void save_dataset(const ToyDataset& ds, const std::filesystem::path& dir);
// Reads a directory written by save_dataset.
ToyDataset load_dataset(const std::filesystem::path& dir);

// Oracle encoder pair: every attribute value owns a seeded random unit
// direction; an embedding is the normalized sum of the three directions of
// a sample's attributes. The image side reads attribute metadata, the text
// side parses the caption, so matched pairs agree exactly.
EncoderPair oracle_encoders(int d, std::uint64_t seed);
FeatureVector oracle_embedding(const Attributes& a, int d, std::uint64_t seed);

}  // namespace lf
