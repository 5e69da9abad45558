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

// Adversarial losses, the cosine-similarity contrastive regularizer and the
// weighted totals for the discriminator and generator updates.

#include <span>
#include <vector>

#include "lf/tensor.hpp"

namespace lf {

struct LossWeights {
  double tau = 0.5;
  double lam = 10.0;  // generator contrastive weight
  double gam = 10.0;  // discriminator-feature contrastive weight
  bool sharpen = true;
  // With sharpening the softmax logits are exp(min(S / tau, clamp)).
  double sharpen_clamp = 30.0;

  void validate() const;

  static LossWeights language_free() { return {}; }
  static LossWeights supervised() {
    LossWeights w;
    w.gam = 5.0;
    return w;
  }
};

double softplus(double x);
double sigmoid(double x);

struct AdvLosses {
  double lg = 0.0;
  double ld = 0.0;
};

// Derivatives of L_G and L_D with respect to each logit.
struct AdvGrads {
  std::vector<double> lg_fake;
  std::vector<double> ld_real;
  std::vector<double> ld_fake;
};

// L_G = sum softplus(-fake); L_D = sum softplus(-real) + sum softplus(fake).
AdvLosses adv_losses(std::span<const double> logits_real,
                     std::span<const double> logits_fake, AdvGrads* grads = nullptr);

// -tau * sum_i log softmax_j(a(j, i))[i] with a = S / tau (or exp(S / tau)
// when sharpening), S(j, i) = cos(rows_j, conds_i). Rows and conds are
// [n, d]. Optional outputs receive dL/drows and dL/dconds.
template <typename T>
double contrastive(const BasicTensor<T>& rows, const BasicTensor<T>& conds,
                   const LossWeights& w, BasicTensor<T>* drows = nullptr,
                   BasicTensor<T>* dconds = nullptr);

struct LossParts {
  double lg = 0.0;
  double ld = 0.0;
  double lcon_d = 0.0;
  double lcon_g = 0.0;
};

struct TotalLosses {
  double g = 0.0;
  double d = 0.0;
};

// D: L_D + gam * L_ConD.  G: L_G + gam * L_ConD + lam * L_ConG.
TotalLosses total_losses(const LossParts& parts, const LossWeights& w);

}  // namespace lf
