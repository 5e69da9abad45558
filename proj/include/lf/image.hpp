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

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lf/tensor.hpp"

namespace lf {

enum class Shape { kCircle, kSquare, kTriangle, kCross };
enum class Color { kBlack, kWhite, kRed, kGreen, kBlue, kYellow, kCyan, kMagenta };
enum class Size { kSmall, kLarge };

inline constexpr int kNumShapes = 4;
inline constexpr int kNumColors = 8;
inline constexpr int kNumSizes = 2;
inline constexpr int kNumAttributeTuples = kNumShapes * kNumColors * kNumSizes;

inline constexpr std::array<std::string_view, kNumShapes> kShapeNames = {
    "circle", "square", "triangle", "cross"};
inline constexpr std::array<std::string_view, kNumColors> kColorNames = {
    "black", "white", "red", "green", "blue", "yellow", "cyan", "magenta"};
inline constexpr std::array<std::string_view, kNumSizes> kSizeNames = {"small",
                                                                        "large"};

struct Attributes {
  Shape shape = Shape::kCircle;
  Color color = Color::kBlack;
  Size size = Size::kSmall;

  // Dense index in [0, 64): shape-major, then color, then size.
  int index() const {
    return (static_cast<int>(shape) * kNumColors + static_cast<int>(color)) *
               kNumSizes +
           static_cast<int>(size);
  }
  static Attributes from_index(int i);
  bool operator==(const Attributes&) const = default;
};

// "a {size} {color} {shape}"
std::string caption_for(const Attributes& a);
// Inverse of caption_for; nullopt when the text does not follow the template.
std::optional<Attributes> parse_caption(std::string_view caption);

// RGB image, channel-major planes, values in [-1, 1]. Synthetic images keep
// the attributes they were rendered from; crops inherit them.
struct Image {
  int side = 0;
  std::vector<float> pixels;  // 3 * side * side
  std::optional<Attributes> attributes;

  Image() = default;
  explicit Image(int s) : side(s), pixels(static_cast<std::size_t>(3) * s * s, 0.0f) {}

  float& at(int c, int y, int x) {
    return pixels[(static_cast<std::size_t>(c) * side + y) * side + x];
  }
  float at(int c, int y, int x) const {
    return pixels[(static_cast<std::size_t>(c) * side + y) * side + x];
  }
};

// Bilinear resample of the square window [x0, x0+crop) x [y0, y0+crop) to
// out x out, sampling at pixel centres. crop == out reproduces the window.
Image crop_resize(const Image& img, int x0, int y0, int crop, int out);

// Batched, differentiable crop-resize over [N, 3, S, S] tensors. Each sample
// has its own window; the output is [N, 3, out, out].
class CropResize {
 public:
  struct Window {
    int x0 = 0, y0 = 0, side = 0;
  };

  Tensor forward(const Tensor& images, const std::vector<Window>& windows, int out);
  Tensor backward(const Tensor& dy) const;

 private:
  struct Tap {
    int src[4];
    float w[4];
  };
  std::vector<int> in_shape_;
  std::vector<Tap> taps_;  // per (n, y, x) of the output, shared over channels
  int out_ = 0;
};

// Batch conversions between Image lists and [N, 3, S, S] tensors.
Tensor images_to_tensor(const std::vector<Image>& images);
std::vector<Image> tensor_to_images(const Tensor& t);

// Separable Gaussian blur with sigma = radius / 2 and a (2 radius + 1) tap
// kernel, edges clamped. radius 0 returns the input unchanged.
Image gaussian_blur(const Image& img, int radius);

// 8-bit PNG I/O; pixel values map [-1, 1] <-> [0, 255].
void write_png(const std::filesystem::path& path, const Image& img);
Image read_png(const std::filesystem::path& path);
// Grid of equally sized images, `columns` per row.
void write_png_grid(const std::filesystem::path& path,
                    const std::vector<Image>& images, int columns);

}  // namespace lf
