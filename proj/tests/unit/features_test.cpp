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

#include <array>
#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "qknn/error.hpp"
#include "qknn/features/color.hpp"
#include "qknn/features/feature_vector.hpp"
#include "qknn/features/image.hpp"
#include "qknn/features/texture.hpp"

namespace qknn::features {
namespace {

namespace fs = std::filesystem;

// Hue level table, first listed interval wins.
int hue_level_reference(int H) {
  struct Range {
    int lo, hi, level;
  };
  static constexpr Range table[] = {{0, 20, 0},    {316, 359, 0},  {21, 40, 1},   {41, 75, 2}, {75, 155, 3},
                                    {156, 190, 4}, {191, 270, 5},  {271, 295, 6}, {296, 315, 7}};
  for (const auto& r : table) {
    if (H >= r.lo && H <= r.hi) return r.level;
  }
  return -1;
}

int sb_level_reference(double x) { return x < 0.2 ? 0 : (x < 0.7 ? 1 : 2); }

RgbImage random_image(std::size_t w, std::size_t h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> c(0, 255);
  RgbImage img(w, h);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t col = 0; col < w; ++col) {
      img.at(r, col) = Rgb{static_cast<std::uint8_t>(c(rng)), static_cast<std::uint8_t>(c(rng)),
                           static_cast<std::uint8_t>(c(rng))};
    }
  }
  return img;
}

TEST(RgbToHsb, SpecExamples) {
  const auto red = rgb_to_hsb({255, 0, 0});
  EXPECT_EQ(red.hue, 0);
  EXPECT_DOUBLE_EQ(red.saturation, 1.0);
  EXPECT_DOUBLE_EQ(red.brightness, 1.0);

  const auto gray = rgb_to_hsb({128, 128, 128});
  EXPECT_EQ(gray.hue, 0);
  EXPECT_DOUBLE_EQ(gray.saturation, 0.0);
  EXPECT_NEAR(gray.brightness, 0.502, 1e-3);

  const auto blue = rgb_to_hsb({0, 0, 255});
  EXPECT_EQ(blue.hue, 240);
  EXPECT_DOUBLE_EQ(blue.saturation, 1.0);
  EXPECT_DOUBLE_EQ(blue.brightness, 1.0);
}

TEST(RgbToHsb, MatchesHexconeReferenceAwayFromRoundingTies) {
  for (int r = 0; r < 256; r += 5) {
    for (int g = 0; g < 256; g += 5) {
      for (int b = 0; b < 256; b += 5) {
        const long double R = r / 255.0L, G = g / 255.0L, B = b / 255.0L;
        const long double hi = std::max({R, G, B}), lo = std::min({R, G, B}), d = hi - lo;
        long double H = 0;
        if (d > 0) {
          if (hi == R) {
            H = 60 * (G - B) / d;
          } else if (hi == G) {
            H = 60 * (B - R) / d + 120;
          } else {
            H = 60 * (R - G) / d + 240;
          }
          if (H < 0) H += 360;
        }
        const long double frac = H - std::floor(H);
        if (std::fabs(frac - 0.5L) < 1e-9L) continue;
        const int expected = static_cast<int>(std::lround(static_cast<double>(H))) % 360;
        const auto p = rgb_to_hsb({static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g), static_cast<std::uint8_t>(b)});
        ASSERT_EQ(p.hue, expected) << r << ',' << g << ',' << b;
        ASSERT_NEAR(p.saturation, hi > 0 ? static_cast<double>(d / hi) : 0.0, 1e-12);
        ASSERT_NEAR(p.brightness, static_cast<double>(hi), 1e-12);
      }
    }
  }
}

TEST(RgbToHsb, HueWrapsBelow360) {
  // Hue 359.6 rounds to 360, which wraps to 0.
  const auto p = rgb_to_hsb({255, 0, 2});
  EXPECT_EQ(p.hue, 0);
}

TEST(QuantizeHsb, SpecExamples) {
  EXPECT_EQ(quantize_hsb({10, 0.1, 0.1}), (QuantizedHsb{0, 0, 0}));
  EXPECT_EQ(quantize_hsb({200, 0.8, 0.5}), (QuantizedHsb{5, 2, 1}));
  EXPECT_EQ(quantize_hsb({359, 1.0, 1.0}), (QuantizedHsb{0, 2, 2}));
}

TEST(QuantizeHsb, SharedBoundaryDegree75GoesToLevelTwo) {
  EXPECT_EQ(quantize_hue(75), 2);
  EXPECT_EQ(quantize_hue(76), 3);
}

TEST(QuantizeHsb, HueSweepMatchesTable) {
  const double boundary[] = {0.0, 0.1999999, 0.2, 0.5, 0.6999999, 0.7, 1.0};
  for (int H = 0; H < 360; ++H) {
    for (double s : boundary) {
      for (double b : boundary) {
        const auto q = quantize_hsb({H, s, b});
        ASSERT_EQ(q.h, hue_level_reference(H)) << H;
        ASSERT_EQ(q.s, sb_level_reference(s)) << s;
        ASSERT_EQ(q.b, sb_level_reference(b)) << b;
      }
    }
  }
}

TEST(ColorIndex, AllCombinationsCoverZeroThroughSeventyOne) {
  std::array<int, 72> seen{};
  for (int h = 0; h < 8; ++h) {
    for (int s = 0; s < 3; ++s) {
      for (int b = 0; b < 3; ++b) {
        const int g = color_index({h, s, b});
        ASSERT_EQ(g, 9 * h + 3 * s + b);
        ++seen[static_cast<std::size_t>(g)];
      }
    }
  }
  for (int count : seen) EXPECT_EQ(count, 1);
  EXPECT_EQ(color_index({0, 0, 0}), 0);
  EXPECT_EQ(color_index({7, 2, 2}), 71);
  EXPECT_EQ(color_index({5, 2, 1}), 52);
}

TEST(ColorHistogram, PureRedPixelLandsInItsQuantizedBin) {
  const auto hist = color_histogram(RgbImage(1, 1, {255, 0, 0}));
  // Hue 0 -> h=0, S=1 -> s=2, B=1 -> b=2.
  const std::size_t bin = 0 * 9 + 2 * 3 + 2;
  EXPECT_DOUBLE_EQ(hist[bin], 1.0);
  EXPECT_DOUBLE_EQ(hist[27], 0.0);
}

TEST(ColorHistogram, UniformGrayHasOneBin) {
  const auto hist = color_histogram(RgbImage(7, 5, {90, 90, 90}));
  int nonzero = 0;
  for (double v : hist) nonzero += v > 0;
  EXPECT_EQ(nonzero, 1);
  EXPECT_DOUBLE_EQ(*std::max_element(hist.begin(), hist.end()), 1.0);
}

TEST(ColorHistogram, TwoDistinctPixelsSplitEvenly) {
  RgbImage img(2, 1);
  img.at(0, 0) = {255, 0, 0};
  img.at(0, 1) = {0, 0, 255};
  const auto hist = color_histogram(img);
  EXPECT_DOUBLE_EQ(hist[8], 0.5);
  EXPECT_DOUBLE_EQ(hist[5 * 9 + 2 * 3 + 2], 0.5);
}

TEST(ColorHistogram, SumsToOneAndRejectsEmpty) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto hist = color_histogram(random_image(13, 9, seed));
    double sum = 0;
    for (double v : hist) {
      EXPECT_GE(v, 0.0);
      sum += v;
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
  EXPECT_THROW(color_histogram(RgbImage{}), Error);
}

TEST(ColorHistogram, UpscaleInvariant) {
  const auto img = random_image(11, 7, 3);
  const auto a = color_histogram(img);
  const auto b = color_histogram(upscale(img, 2));
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-9);
}

TEST(Gray, RoundedRec601LumaInSixteenLevels) {
  for (int v = 0; v < 256; ++v) {
    const auto y = static_cast<int>(std::lround(0.299 * v + 0.587 * v + 0.114 * v));
    EXPECT_EQ(luma({static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v)}), y);
  }
  EXPECT_EQ(luma({255, 0, 0}), 76);
  EXPECT_EQ(luma({0, 255, 0}), 150);
  EXPECT_EQ(luma({0, 0, 255}), 29);
  const auto g = to_gray_levels(RgbImage(1, 1, {255, 255, 255}));
  EXPECT_EQ(g.levels[0], 15);
}

GrayImage checkerboard(std::size_t w, std::size_t h) {
  GrayImage g{w, h, {}};
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) g.levels.push_back(static_cast<std::uint8_t>((r + c) % 2));
  }
  return g;
}

TEST(Glcm, ConstantImageIsSingleDiagonalEntry) {
  GrayImage g{4, 3, std::vector<std::uint8_t>(12, 6)};
  for (const auto& d : kGlcmDirections) {
    const auto m = glcm(g, d);
    EXPECT_DOUBLE_EQ(m(6, 6), 1.0);
  }
}

TEST(Glcm, CheckerboardHorizontalIsAllOffDiagonal) {
  const auto m = glcm(checkerboard(2, 2), {0, 1});
  EXPECT_DOUBLE_EQ(m(0, 1) + m(1, 0), 1.0);
  EXPECT_DOUBLE_EQ(m(0, 0) + m(1, 1), 0.0);
  const auto diag = glcm(checkerboard(2, 2), {-1, 1});
  EXPECT_DOUBLE_EQ(diag(0, 0) + diag(1, 1), 1.0);
}

TEST(Glcm, SymmetricAndNormalized) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = to_gray_levels(random_image(9, 6, seed));
    for (const auto& d : kGlcmDirections) {
      const auto m = glcm(g, d);
      double sum = 0;
      for (int i = 0; i < m.levels; ++i) {
        for (int j = 0; j < m.levels; ++j) {
          sum += m(i, j);
          EXPECT_DOUBLE_EQ(m(i, j), m(j, i));
        }
      }
      EXPECT_NEAR(sum, 1.0, 1e-9);
    }
  }
}

TEST(Glcm, RejectsTinyImages) {
  EXPECT_THROW(glcm(GrayImage{1, 3, std::vector<std::uint8_t>(3, 0)}, {0, 1}), Error);
  EXPECT_THROW(glcm(GrayImage{3, 1, std::vector<std::uint8_t>(3, 0)}, {0, 1}), Error);
}

Glcm matrix(int levels, std::vector<double> p) { return Glcm{levels, std::move(p)}; }

TEST(GlcmStats, SingleEntry) {
  const auto s = glcm_stats(matrix(2, {1, 0, 0, 0}));
  EXPECT_DOUBLE_EQ(s.contrast, 0.0);
  EXPECT_DOUBLE_EQ(s.energy, 1.0);
  EXPECT_DOUBLE_EQ(s.entropy, 0.0);
  EXPECT_DOUBLE_EQ(s.correlation, 0.0);
}

TEST(GlcmStats, UniformTwoLevel) {
  const auto s = glcm_stats(matrix(2, {0.25, 0.25, 0.25, 0.25}));
  EXPECT_NEAR(s.energy, 0.25, 1e-12);
  EXPECT_NEAR(s.entropy, 2.0, 1e-12);
  EXPECT_NEAR(s.contrast, 0.5, 1e-12);
  EXPECT_NEAR(s.correlation, 0.0, 1e-12);
}

TEST(GlcmStats, Checkerboard) {
  const auto s = glcm_stats(matrix(2, {0, 0.5, 0.5, 0}));
  EXPECT_NEAR(s.contrast, 1.0, 1e-12);
  EXPECT_NEAR(s.entropy, 1.0, 1e-12);
  EXPECT_NEAR(s.energy, 0.5, 1e-12);
  EXPECT_NEAR(s.correlation, -1.0, 1e-12);
}

TEST(GlcmStats, MatchesDirectFormulasOnRandomMatrix) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0, 1);
  const int L = 5;
  std::vector<double> p(L * L);
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j <= i; ++j) p[i * L + j] = p[j * L + i] = u(rng);
  }
  double total = 0;
  for (double v : p) total += v;
  for (double& v : p) v /= total;

  double mu = 0, var = 0, contrast = 0, energy = 0, entropy = 0;
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) mu += i * p[i * L + j];
  }
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      const double v = p[i * L + j];
      var += (i - mu) * (i - mu) * v;
      contrast += (i - j) * (i - j) * v;
      energy += v * v;
      if (v > 0) entropy -= v * std::log2(v);
    }
  }
  double cov = 0;
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) cov += (i - mu) * (j - mu) * p[i * L + j];
  }
  const auto s = glcm_stats(matrix(L, p));
  EXPECT_NEAR(s.contrast, contrast, 1e-12);
  EXPECT_NEAR(s.energy, energy, 1e-12);
  EXPECT_NEAR(s.entropy, entropy, 1e-12);
  EXPECT_NEAR(s.correlation, cov / var, 1e-12);
}

TEST(Texture, ConstantImage) {
  const auto t = raw_texture_vector(RgbImage(6, 6, {10, 200, 30}));
  const TextureVector expected{0, 0, 1, 0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_NEAR(t[i], expected[i], 1e-12) << i;
}

TEST(Texture, StatisticsStayInRange) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = texture_statistics(random_image(10, 8, seed));
    for (const auto& d : s.per_direction) {
      EXPECT_GT(d.energy, 0.0);
      EXPECT_LE(d.energy, 1.0);
      EXPECT_GE(d.entropy, 0.0);
    }
    EXPECT_GE(s.variance.contrast, 0.0);
    EXPECT_GE(s.variance.correlation, 0.0);
    EXPECT_GE(s.variance.energy, 0.0);
    EXPECT_GE(s.variance.entropy, 0.0);

    double mean_contrast = 0;
    for (const auto& d : s.per_direction) mean_contrast += d.contrast / 4;
    double var_contrast = 0;
    for (const auto& d : s.per_direction) var_contrast += (d.contrast - mean_contrast) * (d.contrast - mean_contrast) / 4;
    EXPECT_NEAR(s.mean.contrast, mean_contrast, 1e-12);
    EXPECT_NEAR(s.variance.contrast, var_contrast, 1e-12);
  }
}

TEST(Texture, MinMaxNormalizationClampsAndHandlesDegenerateRange) {
  std::vector<TextureVector> train{{1, 0, 0.5, 2, 0, 0, 0, 0}, {3, 0, 0.5, 4, 1, 0, 0, 0}};
  const auto bounds = fit_texture_bounds(train);
  const auto mid = normalize_texture({2, 0, 0.5, 3, 0.5, 7, 0, 0}, bounds);
  EXPECT_DOUBLE_EQ(mid[0], 0.5);
  EXPECT_DOUBLE_EQ(mid[1], 0.0);
  EXPECT_DOUBLE_EQ(mid[5], 0.0);
  const auto out = normalize_texture({9, 0, 0, -5, 0, 0, 0, 0}, bounds);
  EXPECT_DOUBLE_EQ(out[0], 1.0);
  EXPECT_DOUBLE_EQ(out[3], 0.0);
  for (const auto& t : train) {
    for (double v : normalize_texture(t, bounds)) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

TextureBounds bounds_for(const std::vector<RgbImage>& images) {
  std::vector<TextureVector> raw;
  for (const auto& i : images) raw.push_back(raw_texture_vector(i));
  return fit_texture_bounds(raw);
}

TEST(FeatureVector, UnitNormEightyComponentsInUnitInterval) {
  std::vector<RgbImage> images;
  for (std::uint64_t s = 0; s < 6; ++s) images.push_back(random_image(12, 9, s));
  const auto bounds = bounds_for(images);
  for (const auto& img : images) {
    const auto f = extract_features(img, bounds);
    ASSERT_EQ(f.components.size(), 80u);
    double norm = 0;
    for (double v : f.components) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
      norm += v * v;
    }
    EXPECT_NEAR(norm, 1.0, 1e-9);
  }
}

TEST(FeatureVector, DeterministicForIdenticalImages) {
  const auto img = random_image(10, 10, 4);
  const auto bounds = bounds_for({img, random_image(10, 10, 5)});
  EXPECT_EQ(extract_features(img, bounds).components, extract_features(RgbImage(img), bounds).components);
}

TEST(FeatureVector, ColorPartIsNormalizedHistogram) {
  const auto img = random_image(8, 8, 1);
  const auto bounds = bounds_for({img, random_image(8, 8, 2)});
  const auto raw = extract_raw(img);
  const auto f = finalize(raw, bounds, "x");
  const auto t = normalize_texture(raw.texture, bounds);
  double norm = 0;
  for (double v : raw.color) norm += v * v;
  for (double v : t) norm += v * v;
  norm = std::sqrt(norm);
  for (std::size_t i = 0; i < 72; ++i) EXPECT_NEAR(f.components[i], raw.color[i] / norm, 1e-15);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(f.components[72 + i], t[i] / norm, 1e-15);
}

TEST(FeatureCsv, RoundTripIsExact) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<FeatureVector> rows;
  for (int i = 0; i < 20; ++i) {
    FeatureVector f;
    for (auto& v : f.components) v = u(rng) * std::pow(10.0, -static_cast<int>(u(rng) * 12));
    f.source_id = i % 3 == 0 ? "dir/with,comma \"q\"_" + std::to_string(i) + ".png" : "img" + std::to_string(i);
    if (i % 4 != 0) f.label = i % 2 ? "airplanes" : "Leopards";
    rows.push_back(f);
  }
  std::stringstream ss;
  write_feature_csv(ss, rows);
  const auto back = read_feature_csv(ss);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].source_id, rows[i].source_id);
    EXPECT_EQ(back[i].label, rows[i].label);
    EXPECT_EQ(back[i].components, rows[i].components);
  }
}

TEST(FeatureCsv, RejectsMalformedRows) {
  std::stringstream ss("source_id,label,v1\nimg,cat,0.5\n");
  EXPECT_THROW(read_feature_csv(ss), Error);
}

TEST(Bounds, RoundTripIsExact) {
  TextureBounds b;
  for (std::size_t i = 0; i < 8; ++i) {
    b.min[i] = 0.1 * static_cast<double>(i) + 1e-17;
    b.max[i] = std::sqrt(static_cast<double>(i) + 2.0);
  }
  std::stringstream ss;
  write_bounds(ss, b);
  const auto back = read_bounds(ss);
  EXPECT_EQ(back.min, b.min);
  EXPECT_EQ(back.max, b.max);
}

TEST(Image, PngRoundTrip) {
  const auto img = random_image(7, 5, 8);
  const auto path = fs::temp_directory_path() / "qknn_features_roundtrip.png";
  write_png(path, img);
  const auto back = read_image(path);
  fs::remove(path);
  ASSERT_EQ(back.width(), 7u);
  ASSERT_EQ(back.height(), 5u);
  EXPECT_EQ(back.pixels(), img.pixels());
}

TEST(Image, DecodesJpeg) {
  const auto img = read_image(fs::path(QKNN_TEST_DATA_DIR) / "solid_12x8.jpg");
  ASSERT_EQ(img.width(), 12u);
  ASSERT_EQ(img.height(), 8u);
  const Rgb p = img.at(3, 4);
  EXPECT_NEAR(p.r, 40, 4);
  EXPECT_NEAR(p.g, 120, 4);
  EXPECT_NEAR(p.b, 200, 4);

  const auto gray = read_image(fs::path(QKNN_TEST_DATA_DIR) / "gray_5x4.jpg");
  ASSERT_EQ(gray.width(), 5u);
  EXPECT_NEAR(gray.at(0, 0).r, 77, 3);
  EXPECT_EQ(gray.at(0, 0).r, gray.at(0, 0).b);
}

TEST(Image, DecodeFailureNamesThePath) {
  const auto bad = fs::path(QKNN_TEST_DATA_DIR) / "not_an_image.png";
  try {
    read_image(bad);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not_an_image.png"), std::string::npos);
  }
  try {
    extract_features(bad, TextureBounds{});
    FAIL() << "expected an exception";
  } catch (const StageError& e) {
    EXPECT_NE(std::string(e.what()).find("not_an_image.png"), std::string::npos);
  }
}

TEST(Image, ExtensionFilter) {
  EXPECT_TRUE(has_image_extension("a/b.PNG"));
  EXPECT_TRUE(has_image_extension("x.jpeg"));
  EXPECT_TRUE(has_image_extension("x.Jpg"));
  EXPECT_FALSE(has_image_extension("notes.txt"));
  EXPECT_FALSE(has_image_extension("png"));
}

}  // namespace
}  // namespace qknn::features
