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

#include "qknn/knn/vote.hpp"

#include <string>
#include <unordered_map>
#include <vector>

#include "qknn/error.hpp"

namespace qknn::knn {

std::string majority_vote(std::span<const std::size_t> indexes, std::span<const std::string> labels) {
  if (indexes.empty()) throw Error("majority vote over an empty index list");
  std::vector<std::string> order;
  std::unordered_map<std::string, std::size_t> counts;
  for (std::size_t j : indexes) {
    if (j < 1 || j > labels.size()) throw Error("vote index " + std::to_string(j) + " outside the training set");
    const auto& label = labels[j - 1];
    if (counts[label]++ == 0) order.push_back(label);
  }
  const std::string* best = &order.front();
  for (const auto& label : order) {
    if (counts[label] > counts[*best]) best = &label;
  }
  return *best;
}

}  // namespace qknn::knn
