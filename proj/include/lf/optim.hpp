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

#include <cstdint>
#include <string>

#include "lf/archive.hpp"
#include "lf/nn.hpp"

namespace lf::nn {

struct AdamConfig {
  double lr = 2.5e-3;
  double beta1 = 0.0;
  double beta2 = 0.99;
  double eps = 1e-8;
};

// Adam over a fixed parameter list. Moment buffers are keyed by parameter
// name when serialized, so a loaded state must match the same network layout.
class Adam {
 public:
  Adam() = default;
  Adam(ParamList<float> params, AdamConfig cfg);

  void step();
  std::int64_t steps_taken() const { return t_; }
  const AdamConfig& config() const { return cfg_; }

  void save(Archive& ar, const std::string& prefix) const;
  void load(const Archive& ar, const std::string& prefix);

 private:
  ParamList<float> params_;
  AdamConfig cfg_;
  std::vector<Tensor> m_, v_;
  std::int64_t t_ = 0;
};

// Copies every parameter value into / out of an archive under prefix + name.
void save_params(const ParamList<float>& params, Archive& ar, const std::string& prefix);
void load_params(const ParamList<float>& params, const Archive& ar,
                 const std::string& prefix);

}  // namespace lf::nn
