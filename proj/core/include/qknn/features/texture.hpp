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
#include <cstdint>
#include <span>
#include <vector>

#include "qknn/features/image.hpp"

namespace qknn::features {

inline constexpr int kGrayLevels = 16;
inline constexpr std::size_t kTextureComponents = 8;

// Grayscale raster quantized to kGrayLevels levels.
struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> levels;  // row-major, each < kGrayLevels

  std::uint8_t at(std::size_t row, std::size_t col) const { return levels[row * width + col]; }
};

// Integer-rounded Rec.601 luma, then 256 -> kGrayLevels quantization.
std::uint8_t luma(Rgb p);
GrayImage to_gray_levels(const RgbImage& image);

// (row, col) pixel offset of a co-occurrence direction.
struct Offset {
  int drow;
  int dcol;
};

// [0,1], [-1,1], [-1,0], [-1,-1] as unit (row, col) offsets.
inline constexpr std::array<Offset, 4> kGlcmDirections{{{0, 1}, {-1, 1}, {-1, 0}, {-1, -1}}};

// Symmetric normalized co-occurrence matrix, levels x levels, row-major.
struct Glcm {
  int levels = 0;
  std::vector<double> p;

  double operator()(int i, int j) const { return p[static_cast<std::size_t>(i * levels + j)]; }
};

// Counts each in-bounds pixel pair at `offset` together with its transpose and
// divides by the total. Throws for images smaller than 2x2.
Glcm glcm(const GrayImage& image, Offset offset, int levels = kGrayLevels);

struct HaralickStats {
  double contrast = 0.0;
  double correlation = 0.0;  // 0 when either marginal has zero variance
  double energy = 0.0;
  double entropy = 0.0;      // base 2
};

HaralickStats glcm_stats(const Glcm& m);

// Per-direction statistics plus their mean and population variance across the
// four directions.
struct GlcmStats {
  std::array<HaralickStats, 4> per_direction{};
  HaralickStats mean;
  HaralickStats variance;
};

GlcmStats texture_statistics(const RgbImage& image);

// Unnormalized texture vector: (mean contrast, mean correlation, mean energy,
// mean entropy, variance contrast, variance correlation, variance energy,
// variance entropy).
using TextureVector = std::array<double, kTextureComponents>;
TextureVector raw_texture_vector(const RgbImage& image);

// Per-component min-max bounds frozen from a training set.
struct TextureBounds {
  TextureVector min{};
  TextureVector max{};
};

TextureBounds fit_texture_bounds(std::span<const TextureVector> training);

// Min-max scaling, clamped to [0, 1]; degenerate components map to 0.
TextureVector normalize_texture(const TextureVector& raw, const TextureBounds& bounds);

}  // namespace qknn::features
