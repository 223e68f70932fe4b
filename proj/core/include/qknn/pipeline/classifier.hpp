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

#include "qknn/features/feature_vector.hpp"
#include "qknn/knn/search.hpp"
#include "qknn/knn/sigma.hpp"

namespace qknn::pipeline {

struct TrainingSet {
  std::vector<knn::Vector> vectors;
  std::vector<std::string> labels;
  std::vector<std::string> ids;
  features::TextureBounds bounds;

  std::size_t size() const { return vectors.size(); }
};

// Fits texture bounds on `raw` and finalizes every training vector with them.
TrainingSet make_training_set(std::span<const features::RawFeatures> raw, std::span<const std::string> labels,
                              std::span<const std::string> ids);

// Training set from already-finalized vectors, e.g. a feature CSV.
TrainingSet training_from_features(std::span<const features::FeatureVector> rows, const features::TextureBounds& bounds);

struct ClassicalResult {
  std::string label;
  std::vector<std::size_t> neighbors;  // 1-based, nearest first
};

// Brute-force KNN on 1/2 - 1/2 <v0, v>^2: stable ordering by training index on
// ties, majority vote with ties going to the earliest neighbor's label.
ClassicalResult classical_knn(std::span<const double> v0, std::span<const knn::Vector> training,
                              std::span<const std::string> labels, std::size_t k);

struct ClassifyOptions {
  std::size_t k = 3;
  knn::Backend backend = knn::Backend::oracle_level;
  knn::QknnConfig config;
  std::uint64_t seed = 0;
};

struct Classification {
  std::string label;
  std::vector<std::size_t> winners;  // 1-based training indexes
  knn::SearchResult search;
  knn::Sigma sigma;
};

// Distances, k-minimum search and vote. Failures are rethrown as StageError
// naming the stage.
Classification classify_vector(std::span<const double> v0, const TrainingSet& training, const ClassifyOptions& opts);

Classification classify_image(const std::filesystem::path& image, const TrainingSet& training,
                              const ClassifyOptions& opts);

}  // namespace qknn::pipeline
