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

#include "qknn/pipeline/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "qknn/error.hpp"
#include "qknn/knn/vote.hpp"

namespace qknn::pipeline {

TrainingSet make_training_set(std::span<const features::RawFeatures> raw, std::span<const std::string> labels,
                              std::span<const std::string> ids) {
  if (raw.empty()) throw Error("empty training set");
  if (labels.size() != raw.size() || ids.size() != raw.size()) throw Error("training metadata size mismatch");
  std::vector<features::TextureVector> textures;
  textures.reserve(raw.size());
  for (const auto& r : raw) textures.push_back(r.texture);

  TrainingSet t;
  t.bounds = features::fit_texture_bounds(textures);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    t.vectors.push_back(features::finalize(raw[i], t.bounds, ids[i], labels[i]).values());
    t.labels.push_back(labels[i]);
    t.ids.push_back(ids[i]);
  }
  return t;
}

TrainingSet training_from_features(std::span<const features::FeatureVector> rows,
                                   const features::TextureBounds& bounds) {
  if (rows.empty()) throw Error("empty training set");
  TrainingSet t;
  t.bounds = bounds;
  for (const auto& row : rows) {
    if (!row.label) throw Error("training row '" + row.source_id + "' has no label");
    t.vectors.push_back(row.values());
    t.labels.push_back(*row.label);
    t.ids.push_back(row.source_id);
  }
  return t;
}

ClassicalResult classical_knn(std::span<const double> v0, std::span<const knn::Vector> training,
                              std::span<const std::string> labels, std::size_t k) {
  const std::size_t M = training.size();
  if (k < 1 || k > M) throw Error("k must lie in [1, M]");
  if (labels.size() != M) throw Error("label count differs from training size");

  std::vector<double> d(M);
  for (std::size_t j = 0; j < M; ++j) {
    if (training[j].size() != v0.size()) throw Error("dimension mismatch");
    double dot = 0.0;
    for (std::size_t i = 0; i < v0.size(); ++i) dot += v0[i] * training[j][i];
    d[j] = 0.5 - 0.5 * dot * dot;
  }
  std::vector<std::size_t> order(M);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  ClassicalResult r;
  std::vector<std::pair<std::string, std::size_t>> tally;
  for (std::size_t x = 0; x < k; ++x) {
    r.neighbors.push_back(order[x] + 1);
    const auto& label = labels[order[x]];
    auto it = std::find_if(tally.begin(), tally.end(), [&](const auto& e) { return e.first == label; });
    if (it == tally.end()) {
      tally.emplace_back(label, 1);
    } else {
      ++it->second;
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < tally.size(); ++i) {
    if (tally[i].second > tally[best].second) best = i;
  }
  r.label = tally[best].first;
  return r;
}

namespace {

template <typename F>
auto in_stage(const char* stage, F&& f) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what());
  }
}

}  // namespace

Classification classify_vector(std::span<const double> v0, const TrainingSet& training, const ClassifyOptions& opts) {
  qsim::Rng rng(opts.seed);
  Classification c;
  c.sigma = in_stage("distances", [&] {
    return knn::build_sigma(v0, training.vectors, opts.config, opts.backend, rng);
  });
  c.search = in_stage("search", [&] {
    return knn::durr_k_min(c.sigma, opts.k, opts.config.budget_multiplier, rng);
  });
  c.winners = c.search.indexes;
  c.label = in_stage("vote", [&] { return knn::majority_vote(c.winners, training.labels); });
  return c;
}

Classification classify_image(const std::filesystem::path& image, const TrainingSet& training,
                              const ClassifyOptions& opts) {
  const auto v0 = in_stage("features", [&] { return features::extract_features(image, training.bounds).values(); });
  return classify_vector(v0, training, opts);
}

}  // namespace qknn::pipeline
