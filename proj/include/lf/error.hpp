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

#include <stdexcept>
#include <string>

namespace lf {

// Base of every error thrown by the library. Subclasses name the failure
// class so callers (notably the CLI) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LF_DEFINE_ERROR(Name)                 \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(#Name ": " + what) {}         \
  }

LF_DEFINE_ERROR(NormalizationError);
LF_DEFINE_ERROR(DimensionError);
LF_DEFINE_ERROR(ConfigError);
LF_DEFINE_ERROR(FormatError);
LF_DEFINE_ERROR(DegenerateNoiseError);
LF_DEFINE_ERROR(NumericalError);
LF_DEFINE_ERROR(DataError);
LF_DEFINE_ERROR(CheckpointError);

#undef LF_DEFINE_ERROR

}  // namespace lf
