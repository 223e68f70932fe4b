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
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qknn/features/feature_vector.hpp"
#include "qknn/knn/sigma.hpp"
#include "qknn/pipeline/dataset.hpp"

namespace qknn::pipeline {

// Split-independent features of one labeled image.
struct Sample {
  std::string id;
  std::string label;
  features::RawFeatures raw;
};

// Decodes every item; throws listing all files that failed.
std::vector<Sample> extract_samples(const Dataset& dataset);

struct EvalOptions {
  std::vector<std::size_t> k_grid{3, 5, 7, 9};
  std::vector<double> ratio_grid{0.5, 0.7, 0.9};
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  knn::Backend backend = knn::Backend::oracle_level;
  knn::QknnConfig config;
};

struct EvalRow {
  std::size_t trial = 0;
  double ratio = 0.0;
  std::size_t k = 0;
  std::string source_id;
  std::string truth;
  std::string predicted;
  std::string classical;
  std::vector<std::size_t> winners;
  std::uint64_t grover_iterations = 0;
  std::uint64_t budget = 0;

  bool correct() const { return predicted == truth; }
};

struct Tally {
  std::size_t correct = 0;
  std::size_t total = 0;

  double accuracy() const { return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total); }
};

struct EvalCell {
  std::size_t k = 0;
  double ratio = 0.0;
  std::vector<double> accuracy;            // one per trial
  std::vector<double> classical_accuracy;  // same splits, brute-force KNN

  double mean_accuracy() const;
  double mean_classical_accuracy() const;
};

struct EvalReport {
  std::vector<EvalRow> rows;
  std::vector<EvalCell> cells;  // ratio-major, then k
  std::map<std::string, Tally> per_class;
  Tally overall;
  Tally classical_overall;
  std::vector<std::uint64_t> split_seeds;  // per (trial, ratio), trial-major
};

EvalReport evaluate(std::span<const Sample> samples, const EvalOptions& opts);
EvalReport evaluate(const Dataset& dataset, const EvalOptions& opts);

void write_report_csv(std::ostream& os, const EvalReport& report);
void write_report_summary(std::ostream& os, const EvalReport& report, const EvalOptions& opts);

}  // namespace qknn::pipeline
