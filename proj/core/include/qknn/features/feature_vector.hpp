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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qknn/features/color.hpp"
#include "qknn/features/image.hpp"
#include "qknn/features/texture.hpp"

namespace qknn::features {

inline constexpr std::size_t kFeatureDimension = kColorBins + kTextureComponents;  // 80

// Unit-norm nonnegative descriptor: 72 color bins followed by 8 texture values.
struct FeatureVector {
  std::array<double, kFeatureDimension> components{};
  std::optional<std::string> label;
  std::string source_id;

  std::vector<double> values() const { return {components.begin(), components.end()}; }
};

// Everything about an image that does not depend on the training set.
struct RawFeatures {
  std::array<double, kColorBins> color{};
  TextureVector texture{};
};

RawFeatures extract_raw(const RgbImage& image);

// Concatenates color and normalized texture, then L2-normalizes the result.
FeatureVector finalize(const RawFeatures& raw, const TextureBounds& bounds, std::string source_id,
                       std::optional<std::string> label = std::nullopt);

FeatureVector extract_features(const RgbImage& image, const TextureBounds& bounds,
                               std::string source_id = {},
                               std::optional<std::string> label = std::nullopt);

// Decodes and extracts; decode failures are rethrown naming `path`.
FeatureVector extract_features(const std::filesystem::path& path, const TextureBounds& bounds,
                               std::optional<std::string> label = std::nullopt);

// CSV: header row, then source_id,label,v1..v80 at full round-trip precision.
void write_feature_csv(std::ostream& os, std::span<const FeatureVector> rows);
std::vector<FeatureVector> read_feature_csv(std::istream& is);

// Flat key=value sidecar with the frozen texture bounds.
void write_bounds(std::ostream& os, const TextureBounds& bounds);
TextureBounds read_bounds(std::istream& is);

}  // namespace qknn::features
