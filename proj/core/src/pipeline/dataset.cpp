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

#include "qknn/pipeline/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>

#include "qknn/error.hpp"
#include "qknn/features/image.hpp"

namespace qknn::pipeline {

namespace fs = std::filesystem;

std::vector<std::string> Dataset::labels() const {
  std::vector<std::string> out;
  for (const auto& item : items) {
    if (std::find(out.begin(), out.end(), item.label) == out.end()) out.push_back(item.label);
  }
  return out;
}

std::vector<std::size_t> Dataset::train_indexes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < is_train.size(); ++i) {
    if (is_train[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Dataset::test_indexes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < is_train.size(); ++i) {
    if (!is_train[i]) out.push_back(i);
  }
  return out;
}

namespace {

std::vector<fs::path> sorted_entries(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Dataset load_dataset(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw Error("dataset root is not a directory: " + root.string());

  Dataset d;
  std::vector<std::string> unreadable;
  std::vector<std::string> empty_classes;
  for (const auto& class_dir : sorted_entries(root)) {
    if (!fs::is_directory(class_dir)) {
      d.warnings.push_back("ignoring file outside class directories: " + class_dir.string());
      continue;
    }
    const std::string label = class_dir.filename().string();
    std::size_t found = 0;
    for (const auto& entry : sorted_entries(class_dir)) {
      if (fs::is_directory(entry)) {
        d.warnings.push_back("ignoring nested directory: " + entry.string());
        continue;
      }
      if (!features::has_image_extension(entry)) {
        d.warnings.push_back("ignoring non-image file: " + entry.string());
        continue;
      }
      if (!std::ifstream(entry, std::ios::binary)) {
        unreadable.push_back(entry.string());
        continue;
      }
      d.items.push_back({entry, label});
      ++found;
    }
    if (found == 0) empty_classes.push_back(class_dir.string());
  }

  if (!unreadable.empty()) {
    std::string msg = "unreadable image files:";
    for (const auto& p : unreadable) msg += "\n  " + p;
    throw Error(msg);
  }
  if (!empty_classes.empty()) {
    std::string msg = "class directories without images:";
    for (const auto& p : empty_classes) msg += "\n  " + p;
    throw Error(msg);
  }
  if (d.items.empty()) throw Error("dataset root has no class directories: " + root.string());
  return d;
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<bool> stratified_split(std::span<const std::string> labels, double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw Error("training ratio must lie in (0, 1)");
  if (labels.empty()) throw Error("cannot split an empty dataset");

  std::map<std::string, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);

  std::mt19937_64 rng(seed);
  std::vector<bool> train(labels.size(), false);
  for (auto& [label, members] : by_class) {
    const auto n = static_cast<long>(members.size());
    if (n < 2) throw Error("class '" + label + "' has fewer than 2 items; cannot split");
    std::shuffle(members.begin(), members.end(), rng);
    const long n_train = std::clamp(std::lround(ratio * static_cast<double>(n)), 1L, n - 1);
    for (long i = 0; i < n_train; ++i) train[members[static_cast<std::size_t>(i)]] = true;
  }
  return train;
}

Dataset split(Dataset dataset, double ratio, std::uint64_t seed) {
  std::vector<std::string> labels;
  labels.reserve(dataset.items.size());
  for (const auto& item : dataset.items) labels.push_back(item.label);
  dataset.is_train = stratified_split(labels, ratio, seed);
  dataset.ratio = ratio;
  dataset.seed = seed;
  return dataset;
}

}  // namespace qknn::pipeline
