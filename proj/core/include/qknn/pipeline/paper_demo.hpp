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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qknn/features/feature_vector.hpp"
#include "qknn/knn/distance.hpp"
#include "qknn/pipeline/classifier.hpp"
#include "qknn/pipeline/dataset.hpp"

namespace qknn::pipeline {

// manifest.txt lists "train <relative path> <label>" lines in training-index
// order and one "test <relative path> <label>" line.
struct DemoFixture {
  std::vector<DatasetItem> training;
  DatasetItem test;
};

DemoFixture load_demo_fixture(const std::filesystem::path& dir);
void write_demo_manifest(const std::filesystem::path& dir, const DemoFixture& fixture);

struct DemoResult {
  DemoFixture fixture;
  std::vector<features::FeatureVector> training_features;
  features::FeatureVector test_features;
  TrainingSet training;
  knn::DistanceTable table;          // exact and b-bit distances to the test image
  std::vector<std::size_t> ranking;  // 1-based, by (code, index)
  Classification classification;
};

DemoResult run_paper_demo(const std::filesystem::path& dir, const ClassifyOptions& opts);

// Feature excerpt, distance ranking, winners in binary and decimal, label.
void print_demo(std::ostream& os, const DemoResult& result);

}  // namespace qknn::pipeline
