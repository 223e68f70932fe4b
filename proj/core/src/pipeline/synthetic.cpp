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

#include "qknn/pipeline/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "qknn/error.hpp"
#include "qknn/pipeline/dataset.hpp"

namespace qknn::pipeline {

namespace {

using features::Rgb;
using features::RgbImage;
using Rng = std::mt19937_64;

struct Color {
  double r, g, b;
};

Color hsb(double h, double s, double v) {
  h = std::fmod(h, 360.0) / 60.0;
  const double c = v * s;
  const double x = c * (1.0 - std::fabs(std::fmod(h, 2.0) - 1.0));
  const double m = v - c;
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(h)) {
    case 0: r = c, g = x; break;
    case 1: r = x, g = c; break;
    case 2: g = c, b = x; break;
    case 3: g = x, b = c; break;
    case 4: r = x, b = c; break;
    default: r = c, b = x; break;
  }
  return {255.0 * (r + m), 255.0 * (g + m), 255.0 * (b + m)};
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

class Canvas {
 public:
  Canvas(std::size_t w, std::size_t h) : w_(w), h_(h), px_(w * h) {}

  std::size_t width() const { return w_; }
  std::size_t height() const { return h_; }
  Color& at(std::size_t row, std::size_t col) { return px_[row * w_ + col]; }

  template <typename Inside>
  void fill(Inside inside, Color c) {
    for (std::size_t r = 0; r < h_; ++r) {
      for (std::size_t col = 0; col < w_; ++col) {
        if (inside(static_cast<double>(r), static_cast<double>(col))) at(r, col) = c;
      }
    }
  }

  RgbImage render(double noise, Rng& rng) const {
    std::normal_distribution<double> n(0.0, noise);
    RgbImage out(w_, h_);
    auto channel = [](double v) { return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L)); };
    for (std::size_t r = 0; r < h_; ++r) {
      for (std::size_t col = 0; col < w_; ++col) {
        const Color& c = px_[r * w_ + col];
        out.at(r, col) = Rgb{channel(c.r + n(rng)), channel(c.g + n(rng)), channel(c.b + n(rng))};
      }
    }
    return out;
  }

 private:
  std::size_t w_, h_;
  std::vector<Color> px_;
};

void sky(Canvas& cv, Rng& rng) {
  const double hue = uniform(rng, 198, 214);
  const double s_top = uniform(rng, 0.45, 0.65);
  const double s_bottom = uniform(rng, 0.22, 0.32);
  const double v = uniform(rng, 0.82, 0.96);
  const double h = static_cast<double>(cv.height());
  for (std::size_t r = 0; r < cv.height(); ++r) {
    const double f = static_cast<double>(r) / h;
    const Color c = hsb(hue, s_top + (s_bottom - s_top) * f, v);
    for (std::size_t col = 0; col < cv.width(); ++col) cv.at(r, col) = c;
  }
}

void coat(Canvas& cv, Rng& rng) {
  const double hue = uniform(rng, 28, 38);
  const double s = uniform(rng, 0.55, 0.78);
  const double v = uniform(rng, 0.62, 0.8);
  for (std::size_t r = 0; r < cv.height(); ++r) {
    for (std::size_t col = 0; col < cv.width(); ++col) {
      cv.at(r, col) = hsb(hue + uniform(rng, -3, 3), s, v * uniform(rng, 0.92, 1.0));
    }
  }
}

void airplane(Canvas& cv, Rng& rng) {
  const double W = static_cast<double>(cv.width());
  const double H = static_cast<double>(cv.height());
  const double cy = H * uniform(rng, 0.4, 0.6);
  const double cx = W * uniform(rng, 0.45, 0.55);
  const double len = W * uniform(rng, 0.32, 0.4);
  const double thick = H * uniform(rng, 0.06, 0.09);
  const double gray = uniform(rng, 185, 235);
  const Color body{gray, gray, gray + 4};
  const Color wing{gray - 25, gray - 25, gray - 20};

  cv.fill([&](double r, double c) { return std::pow((c - cx) / len, 2) + std::pow((r - cy) / thick, 2) <= 1.0; },
          body);
  const double span = H * uniform(rng, 0.28, 0.38);
  cv.fill([&](double r, double c) {
    const double dx = c - (cx - len * 0.05);
    return std::fabs(r - cy) <= span && dx >= -len * 0.15 && dx <= len * 0.15 - std::fabs(r - cy) * 0.35;
  }, wing);
  cv.fill([&](double r, double c) { return c >= cx - len && c <= cx - len * 0.8 && r >= cy - thick * 3.2 && r <= cy; },
          wing);
}

void rosettes(Canvas& cv, Rng& rng) {
  const double W = static_cast<double>(cv.width());
  const double H = static_cast<double>(cv.height());
  const auto count = static_cast<int>(W * H / uniform(rng, 70, 110));
  for (int i = 0; i < count; ++i) {
    const double cy = uniform(rng, 0, H);
    const double cx = uniform(rng, 0, W);
    const double rad = uniform(rng, 1.2, 3.2);
    const Color spot = hsb(uniform(rng, 15, 30), uniform(rng, 0.5, 0.8), uniform(rng, 0.08, 0.22));
    cv.fill([&](double r, double c) { return std::hypot(r - cy, c - cx) <= rad; }, spot);
  }
}

void ground(Canvas& cv, Rng& rng) {
  const auto horizon = static_cast<std::size_t>(static_cast<double>(cv.height()) * uniform(rng, 0.45, 0.6));
  const double hue = uniform(rng, 30, 42);
  for (std::size_t r = horizon; r < cv.height(); ++r) {
    for (std::size_t col = 0; col < cv.width(); ++col) {
      cv.at(r, col) = hsb(hue, uniform(rng, 0.4, 0.6), uniform(rng, 0.55, 0.75));
    }
  }
}

void enclosure(Canvas& cv, Rng& rng) {
  const auto top = static_cast<std::size_t>(static_cast<double>(cv.height()) * uniform(rng, 0.35, 0.5));
  const double hue = uniform(rng, 200, 215);
  for (std::size_t r = 0; r < top; ++r) {
    for (std::size_t col = 0; col < cv.width(); ++col) cv.at(r, col) = hsb(hue, 0.35, 0.85);
  }
}

}  // namespace

RgbImage synthesize(const std::string& class_name, std::uint64_t seed, const SyntheticOptions& opts) {
  if (opts.width < 8 || opts.height < 8) throw Error("synthetic images must be at least 8x8");
  Rng rng(seed);
  Canvas cv(opts.width, opts.height);
  const bool atypical = uniform(rng, 0, 1) < opts.atypical_rate;
  if (class_name == "airplanes") {
    sky(cv, rng);
    if (atypical) ground(cv, rng);
    airplane(cv, rng);
  } else if (class_name == "Leopards") {
    coat(cv, rng);
    rosettes(cv, rng);
    if (atypical) enclosure(cv, rng);
  } else {
    throw Error("unknown synthetic class '" + class_name + "'");
  }
  return cv.render(opts.noise, rng);
}

std::vector<std::filesystem::path> write_synthetic_dataset(const std::filesystem::path& root, std::size_t per_class,
                                                           std::uint64_t seed, const SyntheticOptions& opts) {
  std::vector<std::filesystem::path> out;
  for (std::size_t ci = 0; ci < kSyntheticClasses.size(); ++ci) {
    const auto& name = kSyntheticClasses[ci];
    const auto dir = root / name;
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < per_class; ++i) {
      char file[64];
      std::snprintf(file, sizeof file, "%s_%03zu.png", name.c_str(), i + 1);
      const auto path = dir / file;
      features::write_png(path, synthesize(name, mix_seed(seed, ci * 1000003 + i), opts));
      out.push_back(path);
    }
  }
  return out;
}

}  // namespace qknn::pipeline
