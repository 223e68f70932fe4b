// Copyright 2026 The qknn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>

#include "qknn/features/image.hpp"

namespace qknn::features {

inline constexpr std::size_t kColorBins = 72;
inline constexpr int kHueWeight = 9;         // Q_h
inline constexpr int kSaturationWeight = 3;  // Q_s

// Hue in whole degrees [0, 359]; saturation and brightness in [0, 1].
struct HsbPixel {
  int hue = 0;
  double saturation = 0.0;
  double brightness = 0.0;
};

// Quantized levels: hue 0..7, saturation 0..2, brightness 0..2.
struct QuantizedHsb {
  int h = 0;
  int s = 0;
  int b = 0;

  friend bool operator==(const QuantizedHsb&, const QuantizedHsb&) = default;
};

// Hexcone RGB -> HSB. Hue is rounded to the nearest degree and 360 wraps to 0.
HsbPixel rgb_to_hsb(Rgb pixel);

// Perceptual 8x3x3 quantization. Hue 75 falls in level 2.
QuantizedHsb quantize_hsb(const HsbPixel& p);
int quantize_hue(int hue);
int quantize_level(double value);  // shared S/B thresholds 0.2 and 0.7

// G = h * Q_h + s * Q_s + b, in 0..71.
int color_index(const QuantizedHsb& q);

// L1-normalized histogram of G over all pixels. Throws on an empty image.
std::array<double, kColorBins> color_histogram(const RgbImage& image);

}  // namespace qknn::features
