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

// Regenerates the ten-image demo fixture: five airplanes, five Leopards and
// one held-out airplane, searching seeds until every airplane is closer to
// the test image than every Leopard. With --dataset, writes a class-per-
// directory synthetic dataset instead.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qknn/features/feature_vector.hpp"
#include "qknn/knn/distance.hpp"
#include "qknn/pipeline/classifier.hpp"
#include "qknn/pipeline/dataset.hpp"
#include "qknn/pipeline/paper_demo.hpp"
#include "qknn/pipeline/synthetic.hpp"

namespace fs = std::filesystem;
using namespace qknn;

namespace {

constexpr std::size_t kPerClass = 5;

bool separated(const pipeline::DemoFixture& f) {
  std::vector<features::RawFeatures> raw;
  std::vector<std::string> labels, ids;
  for (const auto& item : f.training) {
    raw.push_back(features::extract_raw(features::read_image(item.path)));
    labels.push_back(item.label);
    ids.push_back(item.path.string());
  }
  const auto training = pipeline::make_training_set(raw, labels, ids);
  const auto v0 = features::extract_features(f.test.path, training.bounds).values();
  const auto table = knn::distance_table(v0, training.vectors, 8);
  double worst_airplane = 0.0;
  double best_leopard = 1.0;
  for (std::size_t j = 0; j < table.size(); ++j) {
    if (labels[j] == "airplanes") {
      worst_airplane = std::max(worst_airplane, table.exact[j]);
    } else {
      best_leopard = std::min(best_leopard, table.exact[j]);
    }
  }
  return worst_airplane < best_leopard;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Write synthetic image fixtures"};
  std::string out;
  std::uint64_t seed = 2024;
  std::size_t per_class = 0;
  double atypical = 0.1;
  app.add_option("dir", out, "Output directory")->required();
  app.add_option("--seed", seed, "Base seed");
  app.add_option("--dataset", per_class, "Write a dataset with this many images per class instead of the demo fixture");
  app.add_option("--atypical", atypical, "Share of dataset images with the other class's background")->check(CLI::Range(0.0, 1.0));
  CLI11_PARSE(app, argc, argv);
  const fs::path dir = out;

  if (per_class > 0) {
    const auto paths = pipeline::write_synthetic_dataset(dir, per_class, seed, {64, 48, 6.0, atypical});
    std::cout << "wrote " << paths.size() << " images to " << dir.string() << '\n';
    return 0;
  }

  const pipeline::SyntheticOptions opts{96, 64, 6.0, 0.0};
  for (int attempt = 0; attempt < 100; ++attempt, ++seed) {
    pipeline::DemoFixture f;
    for (const auto& cls : pipeline::kSyntheticClasses) {
      fs::create_directories(dir / "train" / cls);
      for (std::size_t i = 0; i < kPerClass; ++i) {
        const auto path = dir / "train" / cls / (cls + "_" + std::to_string(i + 1) + ".png");
        features::write_png(path, pipeline::synthesize(cls, pipeline::mix_seed(seed, f.training.size()), opts));
        f.training.push_back({path, cls});
      }
    }
    fs::create_directories(dir / "test");
    f.test = {dir / "test" / "airplanes_test.png", "airplanes"};
    features::write_png(f.test.path, pipeline::synthesize("airplanes", pipeline::mix_seed(seed, 99), opts));

    if (separated(f)) {
      pipeline::write_demo_manifest(dir, f);
      std::cout << "fixture written to " << dir.string() << " (seed " << seed << ")\n";
      return 0;
    }
  }
  std::cerr << "no separated fixture found\n";
  return 1;
}
