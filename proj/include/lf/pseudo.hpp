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

// Pseudo text features: image features perturbed on the unit hypersphere,
// either by a fixed-magnitude Gaussian direction or by a learned
// mean/log-std inference model, plus the probability bound for the fixed
// scheme and its Monte-Carlo check.

#include <cstdint>
#include <vector>

#include "lf/features.hpp"
#include "lf/nn.hpp"
#include "lf/optim.hpp"
#include "lf/rng.hpp"

namespace lf {

struct FixedPerturbSpec {
  double xi = 0.1;
  void validate() const;
};

// d i.i.d. standard normals.
FeatureVector sample_noise(int d, Rng& rng);

// f + xi * eps * |f| / |eps| (before renormalization).
FeatureVector perturb_fixed(const FeatureVector& f, const FixedPerturbSpec& spec,
                            const FeatureVector& eps);
UnitFeature pseudo_fixed(const FeatureVector& f, const FixedPerturbSpec& spec,
                         const FeatureVector& eps);

// ---------------------------------------------------------------------------
// Trainable perturbation

// r1 (mean offset) and r2 (log std), each 4 fully-connected layers of width
// d with leaky ReLU between them. The log std is clamped to
// [kLogStdMin, kLogStdMax] before exponentiation.
template <typename T>
class BasicInferenceModel {
 public:
  using Tensor = BasicTensor<T>;
  static constexpr int kLayers = 4;
  static constexpr double kLogStdMin = -10.0;
  static constexpr double kLogStdMax = 2.0;

  BasicInferenceModel() = default;
  // The r2 output bias starts at log(init_scale / sqrt(d)), so a unit feature
  // is initially perturbed by roughly init_scale in norm.
  BasicInferenceModel(int d, Rng& rng, double init_scale = 0.1);

  int dim() const { return d_; }
  nn::ParamList<T> params();

  // h~ = f + r1(f) + eps * exp(clamp(r2(f))) for [N, d] batches; caches
  // intermediates for backward.
  Tensor perturb(const Tensor& f, const Tensor& eps);
  // Accumulates parameter gradients from dL/dh~ of the last perturb call.
  void backward(const Tensor& dh);

 private:
  struct Mlp {
    std::vector<nn::Linear<T>> layers;
    std::vector<Tensor> pre;  // inputs to each activation
    Tensor forward(const Tensor& x);
    void backward(const Tensor& dy);
  };

  int d_ = 0;
  Mlp r1_, r2_;
  Tensor eps_, log_std_raw_, scale_;
};

using InferenceModel = BasicInferenceModel<float>;

UnitFeature pseudo_trainable(const FeatureVector& f, InferenceModel& m,
                             const FeatureVector& eps);

// Mean of -cos(h~_i, h_i) over rows and its gradient with respect to h~.
template <typename T>
double neg_cosine_loss(const BasicTensor<T>& h_tilde, const BasicTensor<T>& target,
                       BasicTensor<T>* grad);

struct InferenceTrainConfig {
  int steps = 2000;
  int batch = 64;
  double lr = 1e-3;
  double holdout = 0.1;
  int log_every = 50;
  std::uint64_t seed = 0;
};

struct InferenceTrainReport {
  std::vector<std::pair<int, double>> curve;  // (step, training batch loss)
  double holdout_before = 0.0;
  double holdout_after = 0.0;
  std::size_t holdout_rows = 0;
};

// Fits the model so that pseudo features of image rows match the matched
// text rows (maximizing cosine similarity). Rows are matched by index.
// Holdout losses use a fixed noise draw so before/after are comparable; a
// single-row store is its own holdout.
InferenceTrainReport train_inference_model(const FeatureStore& image_features,
                                           const FeatureStore& text_features,
                                           InferenceModel& m,
                                           const InferenceTrainConfig& cfg);

void save_inference_model(InferenceModel& m, Archive& ar, const std::string& prefix);
void load_inference_model(InferenceModel& m, const Archive& ar, const std::string& prefix);

// ---------------------------------------------------------------------------
// Probability bound

struct BoundQuery {
  double c = 0.9;
  double xi = 0.1;
  int d = 64;
  void validate() const;
};

// Density of a^T b for a, b on the unit sphere, taken as
// C_p (1 - x^2)^p on [-1, 1]. kSphere uses the exact exponent (d - 3) / 2 for
// independent uniform directions in R^d; kPaperExact uses d/2 - 1, the form
// in which the bound is usually quoted (it equals the sphere density one
// dimension up).
enum class DensityConvention { kSphere, kPaperExact };

double density_exponent(int d, DensityConvention conv);
// P(a^T b <= z) by adaptive Gauss-Kronrod quadrature (absolute tol 1e-10).
double inner_product_cdf(double z, int d, DensityConvention conv);

// 1 - CDF((c - 1) / xi + c), with the limit clamped to [-1, 1].
double theorem1_bound(const BoundQuery& q,
                      DensityConvention conv = DensityConvention::kSphere);

// Per-sample floor on Sim(f, h') given a^T b, where a = f/|f|, b = eps/|eps|.
inline double pointwise_bound(double a_dot_b, double xi) {
  return (1.0 + xi * a_dot_b) / (1.0 + xi);
}

// Sim(f, pseudo_fixed(f, xi, eps)) for `trials` fresh eps around a fixed
// unit f = e_1.
std::vector<double> sample_similarities(int d, double xi, int trials, Rng& rng);

struct McResult {
  double empirical = 0.0;
  double bound = 0.0;
  bool passed = false;
};

McResult mc_verdict(const std::vector<double>& sims, const BoundQuery& q,
                    DensityConvention conv);
McResult theorem1_mc_check(const BoundQuery& q, int trials, Rng& rng,
                           DensityConvention conv = DensityConvention::kSphere);

// Kolmogorov-Smirnov distance of simulated a^T b (uniform unit pairs) against
// each density convention, at d = 2, 3, 8.
struct DensityCalibration {
  double sphere_ks = 0.0;
  double paper_ks = 0.0;
  DensityConvention selected = DensityConvention::kSphere;
};
DensityCalibration calibrate_density(std::uint64_t seed, int samples = 20000);

}  // namespace lf
