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

#include "qknn/features/texture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qknn/error.hpp"

namespace qknn::features {

std::uint8_t luma(Rgb p) {
  const double y = 0.299 * p.r + 0.587 * p.g + 0.114 * p.b;
  return static_cast<std::uint8_t>(std::clamp(std::lround(y), 0L, 255L));
}

GrayImage to_gray_levels(const RgbImage& image) {
  GrayImage g{image.width(), image.height(), {}};
  g.levels.reserve(image.pixel_count());
  for (const auto& px : image.pixels()) {
    g.levels.push_back(static_cast<std::uint8_t>(luma(px) * kGrayLevels / 256));
  }
  return g;
}

Glcm glcm(const GrayImage& image, Offset offset, int levels) {
  if (image.width < 2 || image.height < 2) throw Error("GLCM needs an image of at least 2x2 pixels");
  if (levels < 1) throw Error("GLCM needs at least one gray level");
  Glcm m{levels, std::vector<double>(static_cast<std::size_t>(levels * levels), 0.0)};
  const auto h = static_cast<long>(image.height);
  const auto w = static_cast<long>(image.width);
  double total = 0.0;
  for (long r = 0; r < h; ++r) {
    const long r2 = r + offset.drow;
    if (r2 < 0 || r2 >= h) continue;
    for (long c = 0; c < w; ++c) {
      const long c2 = c + offset.dcol;
      if (c2 < 0 || c2 >= w) continue;
      const int a = image.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      const int b = image.at(static_cast<std::size_t>(r2), static_cast<std::size_t>(c2));
      if (a >= levels || b >= levels) throw Error("gray level outside GLCM range");
      m.p[static_cast<std::size_t>(a * levels + b)] += 1.0;
      m.p[static_cast<std::size_t>(b * levels + a)] += 1.0;
      total += 2.0;
    }
  }
  for (auto& v : m.p) v /= total;
  return m;
}

HaralickStats glcm_stats(const Glcm& m) {
  const int L = m.levels;
  double mu_i = 0.0;
  double mu_j = 0.0;
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      mu_i += i * m(i, j);
      mu_j += j * m(i, j);
    }
  }
  double var_i = 0.0;
  double var_j = 0.0;
  HaralickStats s;
  double cov = 0.0;
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      const double p = m(i, j);
      var_i += (i - mu_i) * (i - mu_i) * p;
      var_j += (j - mu_j) * (j - mu_j) * p;
      cov += (i - mu_i) * (j - mu_j) * p;
      s.contrast += static_cast<double>((i - j) * (i - j)) * p;
      s.energy += p * p;
      if (p > 0.0) s.entropy -= p * std::log2(p);
    }
  }
  const double denom = std::sqrt(var_i) * std::sqrt(var_j);
  s.correlation = denom > 1e-15 ? cov / denom : 0.0;
  return s;
}

GlcmStats texture_statistics(const RgbImage& image) {
  const GrayImage gray = to_gray_levels(image);
  GlcmStats out;
  for (std::size_t d = 0; d < kGlcmDirections.size(); ++d) {
    out.per_direction[d] = glcm_stats(glcm(gray, kGlcmDirections[d]));
  }
  auto mean_var = [&](double HaralickStats::*field, double& mean, double& var) {
    mean = 0.0;
    for (const auto& s : out.per_direction) mean += s.*field;
    mean /= static_cast<double>(out.per_direction.size());
    var = 0.0;
    for (const auto& s : out.per_direction) var += (s.*field - mean) * (s.*field - mean);
    var /= static_cast<double>(out.per_direction.size());
  };
  mean_var(&HaralickStats::contrast, out.mean.contrast, out.variance.contrast);
  mean_var(&HaralickStats::correlation, out.mean.correlation, out.variance.correlation);
  mean_var(&HaralickStats::energy, out.mean.energy, out.variance.energy);
  mean_var(&HaralickStats::entropy, out.mean.entropy, out.variance.entropy);
  return out;
}

TextureVector raw_texture_vector(const RgbImage& image) {
  const GlcmStats s = texture_statistics(image);
  return {s.mean.contrast,     s.mean.correlation,     s.mean.energy,     s.mean.entropy,
          s.variance.contrast, s.variance.correlation, s.variance.energy, s.variance.entropy};
}

TextureBounds fit_texture_bounds(std::span<const TextureVector> training) {
  if (training.empty()) throw Error("texture bounds need at least one training image");
  TextureBounds b;
  b.min.fill(std::numeric_limits<double>::infinity());
  b.max.fill(-std::numeric_limits<double>::infinity());
  for (const auto& t : training) {
    for (std::size_t k = 0; k < kTextureComponents; ++k) {
      b.min[k] = std::min(b.min[k], t[k]);
      b.max[k] = std::max(b.max[k], t[k]);
    }
  }
  return b;
}

TextureVector normalize_texture(const TextureVector& raw, const TextureBounds& bounds) {
  TextureVector out{};
  for (std::size_t k = 0; k < kTextureComponents; ++k) {
    const double span = bounds.max[k] - bounds.min[k];
    out[k] = span > 0.0 ? std::clamp((raw[k] - bounds.min[k]) / span, 0.0, 1.0) : 0.0;
  }
  return out;
}

}  // namespace qknn::features
