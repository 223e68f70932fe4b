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

#include "qknn/features/color.hpp"

#include <algorithm>
#include <cmath>

#include "qknn/error.hpp"

namespace qknn::features {

HsbPixel rgb_to_hsb(Rgb pixel) {
  const double r = pixel.r / 255.0;
  const double g = pixel.g / 255.0;
  const double b = pixel.b / 255.0;
  const double hi = std::max({r, g, b});
  const double lo = std::min({r, g, b});
  const double delta = hi - lo;

  HsbPixel out;
  out.brightness = hi;
  out.saturation = hi > 0.0 ? delta / hi : 0.0;
  if (delta <= 0.0) return out;

  double hue = 0.0;
  if (hi == r) {
    hue = 60.0 * std::fmod((g - b) / delta, 6.0);
  } else if (hi == g) {
    hue = 60.0 * ((b - r) / delta + 2.0);
  } else {
    hue = 60.0 * ((r - g) / delta + 4.0);
  }
  if (hue < 0.0) hue += 360.0;
  int deg = static_cast<int>(std::lround(hue));
  if (deg >= 360) deg -= 360;
  out.hue = deg;
  return out;
}

int quantize_hue(int hue) {
  if (hue <= 20) return 0;
  if (hue <= 40) return 1;
  if (hue <= 75) return 2;
  if (hue <= 155) return 3;
  if (hue <= 190) return 4;
  if (hue <= 270) return 5;
  if (hue <= 295) return 6;
  if (hue <= 315) return 7;
  return 0;
}

int quantize_level(double value) {
  if (value < 0.2) return 0;
  if (value < 0.7) return 1;
  return 2;
}

QuantizedHsb quantize_hsb(const HsbPixel& p) {
  return QuantizedHsb{quantize_hue(p.hue), quantize_level(p.saturation), quantize_level(p.brightness)};
}

int color_index(const QuantizedHsb& q) { return q.h * kHueWeight + q.s * kSaturationWeight + q.b; }

std::array<double, kColorBins> color_histogram(const RgbImage& image) {
  if (image.empty()) throw Error("color histogram of an empty image");
  std::array<double, kColorBins> hist{};
  for (const auto& px : image.pixels()) hist[static_cast<std::size_t>(color_index(quantize_hsb(rgb_to_hsb(px))))] += 1.0;
  const double n = static_cast<double>(image.pixel_count());
  for (auto& v : hist) v /= n;
  return hist;
}

}  // namespace qknn::features
