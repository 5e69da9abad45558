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

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "lf/tensor.hpp"

namespace lf {

// Ordered collection of named float tensors plus a JSON metadata string,
// stored in a little-endian binary file:
//
//   "LFCK" | u32 version | u64 meta_len | meta bytes | u32 count |
//   count x { u32 name_len | name | u32 ndim | ndim x i32 | f32 data }
//
// Entries keep insertion order, so save -> load -> save reproduces the bytes.
class Archive {
 public:
  static constexpr std::uint32_t kVersion = 1;

  void put(const std::string& name, const Tensor& t);
  const Tensor& get(const std::string& name) const;
  bool contains(const std::string& name) const;

  std::string& meta() { return meta_; }
  const std::string& meta() const { return meta_; }
  const std::vector<std::pair<std::string, Tensor>>& entries() const {
    return entries_;
  }

  std::string to_bytes() const;
  static Archive from_bytes(const std::string& bytes);

  void save(const std::filesystem::path& path) const;
  static Archive load(const std::filesystem::path& path);

 private:
  std::vector<std::pair<std::string, Tensor>> entries_;
  std::string meta_;
};

// Reads a whole file; throws FormatError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

// 64-bit FNV-1a, used for golden hashes and determinism checks.
std::uint64_t fnv1a(const void* data, std::size_t size);
inline std::uint64_t fnv1a(const std::string& s) { return fnv1a(s.data(), s.size()); }

}  // namespace lf
