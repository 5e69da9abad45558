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

// Joint image/text feature space: feature vectors, the encoder interface,
// crop-averaged image feature extraction and the on-disk feature store.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lf/image.hpp"
#include "lf/rng.hpp"

namespace lf {

// Finite real vector in the d-dimensional joint space.
class FeatureVector {
 public:
  FeatureVector() = default;
  explicit FeatureVector(std::vector<double> values);

  int dim() const { return static_cast<int>(values_.size()); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double norm() const;

  bool operator==(const FeatureVector&) const = default;

 private:
  std::vector<double> values_;
};

// A FeatureVector with L2 norm 1 (within 1e-6).
class UnitFeature {
 public:
  static constexpr double kNormTolerance = 1e-6;

  // Validates the norm of an already-normalized vector (e.g. read from disk).
  static UnitFeature checked(FeatureVector v);

  const FeatureVector& vec() const { return v_; }
  int dim() const { return v_.dim(); }
  std::span<const double> values() const { return v_.values(); }
  double operator[](std::size_t i) const { return v_[i]; }

 private:
  friend UnitFeature normalize(const FeatureVector& v);
  explicit UnitFeature(FeatureVector v) : v_(std::move(v)) {}
  FeatureVector v_;
};

// v / ||v||. Throws NormalizationError for a zero vector.
UnitFeature normalize(const FeatureVector& v);

// <u, v> / (||u|| ||v||). Throws DimensionError on mismatched d and
// NormalizationError when either vector is zero.
double cosine_sim(const FeatureVector& u, const FeatureVector& v);
double dot(const FeatureVector& u, const FeatureVector& v);

struct EncoderPair {
  int d = 0;
  std::function<FeatureVector(const Image&)> image;
  std::function<FeatureVector(std::string_view)> text;
};

// Random-crop augmentation: k crops, each with a side drawn uniformly from
// the integers [a, w] and a uniformly placed window.
struct AugmentSpec {
  int k = 1;
  int a = 32;
  int w = 32;
  bool enabled = true;

  void validate() const;
};

// Mean of the image encoder over k augmented crops, each resized back to w.
// Raw (unnormalized) encoder outputs are averaged. With augmentation
// disabled, or k == 1 and a == w, the result equals image_encoder(x).
FeatureVector extract_image_feature(const Image& x, const EncoderPair& enc,
                                    const AugmentSpec& aug, Rng& rng);

// ---------------------------------------------------------------------------
// Feature store

struct ManifestEntry {
  std::int64_t row = 0;
  std::string source;
  std::optional<std::string> caption;

  bool operator==(const ManifestEntry&) const = default;
};

// N x d float32 matrix with one manifest entry per row.
//
// Binary layout (little-endian): "LFTF" | u32 version | u32 d | u64 N |
// N*d float32 row-major. The manifest lives next to it in
// <path>.manifest.jsonl with one {"row", "source", "caption"} object per line.
struct FeatureStore {
  static constexpr std::uint32_t kVersion = 1;

  std::uint32_t d = 0;
  std::vector<float> rows;
  std::vector<ManifestEntry> manifest;

  std::size_t count() const { return manifest.size(); }
  std::span<const float> row(std::size_t i) const {
    return std::span<const float>(rows).subspan(i * d, d);
  }
  FeatureVector feature(std::size_t i) const;
  void append(const FeatureVector& v, std::string source,
              std::optional<std::string> caption = std::nullopt);
  void validate() const;

  // Bitwise equality of rows plus equality of d and manifest.
  bool identical(const FeatureStore& o) const;
};

std::filesystem::path manifest_path(const std::filesystem::path& store_path);
void store_write(const FeatureStore& fs, const std::filesystem::path& path);
FeatureStore store_read(const std::filesystem::path& path);

}  // namespace lf
