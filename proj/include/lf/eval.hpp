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

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "lf/features.hpp"
#include "lf/gan.hpp"
#include "lf/image.hpp"

namespace lf {

struct GaussianStats {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;

  int dim() const { return static_cast<int>(mean.size()); }
  void validate() const;
};

// Streaming mean/covariance (Welford); finish() uses the unbiased N - 1
// normalizer (a zero covariance for a single sample).
class GaussianAccumulator {
 public:
  explicit GaussianAccumulator(int d) : mean_(Eigen::VectorXd::Zero(d)),
                                        m2_(Eigen::MatrixXd::Zero(d, d)) {}
  void add(const Eigen::VectorXd& x);
  std::size_t count() const { return n_; }
  GaussianStats finish() const;

 private:
  std::size_t n_ = 0;
  Eigen::VectorXd mean_;
  Eigen::MatrixXd m2_;
};

// Rows of [N, d] features.
GaussianStats fit_gaussian(const Tensor& features);

// |mu_a - mu_b|^2 + Tr(S_a + S_b - 2 (S_a S_b)^(1/2)); the trace term is
// computed from the eigenvalues of S_a^(1/2) S_b S_a^(1/2). Eigenvalues
// down to -1e-6 are clipped to zero; anything more negative is an error.
double fid(const GaussianStats& a, const GaussianStats& b);

using FeatureExtractor = std::function<Tensor(const Tensor& images)>;

// Blur both sets with radius k (sigma = k / 2, k = 0 is the identity),
// extract features in batches, fit Gaussians and return their FID.
double fid_k(const std::vector<Image>& a, const std::vector<Image>& b, int k,
             const FeatureExtractor& extractor, int batch = 256);

struct InceptionScore {
  double mean = 0.0;
  double std = 0.0;
};

// probs: one class distribution per image. Split i covers rows
// [i N / splits, (i + 1) N / splits).
InceptionScore inception_score(const std::vector<std::vector<double>>& probs, int splits = 10);

// Produces images for a batch of conditions.
using ImageSource =
    std::function<std::vector<Image>(const std::vector<UnitFeature>& conds, Rng& rng)>;
using AttributeProbe = std::function<std::vector<Attributes>(const std::vector<Image>&)>;

ImageSource generator_source(Generator& g);

struct CondAccuracy {
  double attribute = 0.0;  // mean fraction of (shape, color, size) matched
  double exact = 0.0;      // fraction with all three matched
  std::size_t prompts = 0;
};

// One image per prompt, conditioned on the normalized text feature of the
// prompt's caption, classified by the probe.
CondAccuracy conditional_accuracy(const ImageSource& source, const EncoderPair& enc,
                                  const AttributeProbe& probe,
                                  const std::vector<Attributes>& prompts, std::uint64_t seed,
                                  int batch = 64);

// Per-attribute chance rate for uniformly distributed labels.
double chance_attribute_accuracy();

}  // namespace lf
