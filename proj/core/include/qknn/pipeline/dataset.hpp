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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace qknn::pipeline {

struct DatasetItem {
  std::filesystem::path path;
  std::string label;
};

struct Dataset {
  std::vector<DatasetItem> items;
  std::vector<bool> is_train;  // parallel to items; empty until split
  std::uint64_t seed = 0;
  double ratio = 0.0;
  std::vector<std::string> warnings;

  bool is_split() const { return is_train.size() == items.size() && !items.empty(); }
  std::vector<std::string> labels() const;  // distinct, in item order
  std::vector<std::size_t> train_indexes() const;
  std::vector<std::size_t> test_indexes() const;
};

// One subdirectory per class; labels are the directory names. Items are in
// sorted path order. Stray files and nested directories are skipped with a
// warning.
Dataset load_dataset(const std::filesystem::path& root);

// Per-class shuffle with lround(ratio * n) training items, clamped so every
// class keeps at least one item on each side.
std::vector<bool> stratified_split(std::span<const std::string> labels, double ratio, std::uint64_t seed);

Dataset split(Dataset dataset, double ratio, std::uint64_t seed);

// SplitMix64 finalizer; derives independent stream seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt);

}  // namespace qknn::pipeline
