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

#include "qknn/pipeline/paper_demo.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include "qknn/error.hpp"
#include "qknn/qsim/layout.hpp"

namespace qknn::pipeline {

namespace fs = std::filesystem;

DemoFixture load_demo_fixture(const fs::path& dir) {
  const auto manifest = dir / "manifest.txt";
  std::ifstream in(manifest);
  if (!in) throw Error("missing demo manifest: " + manifest.string());
  DemoFixture f;
  bool have_test = false;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream ss(line);
    std::string role, rel, label;
    if (!(ss >> role >> rel >> label)) throw Error(manifest.string() + ":" + std::to_string(n) + ": malformed line");
    if (role == "train") {
      f.training.push_back({dir / rel, label});
    } else if (role == "test") {
      f.test = {dir / rel, label};
      have_test = true;
    } else {
      throw Error(manifest.string() + ":" + std::to_string(n) + ": unknown role '" + role + "'");
    }
  }
  if (f.training.empty() || !have_test) throw Error("demo manifest needs training items and a test item");
  return f;
}

void write_demo_manifest(const fs::path& dir, const DemoFixture& fixture) {
  std::ofstream out(dir / "manifest.txt");
  if (!out) throw Error("cannot write demo manifest in " + dir.string());
  out << "# role path label\n";
  for (const auto& item : fixture.training) {
    out << "train " << fs::relative(item.path, dir).generic_string() << ' ' << item.label << '\n';
  }
  out << "test " << fs::relative(fixture.test.path, dir).generic_string() << ' ' << fixture.test.label << '\n';
}

DemoResult run_paper_demo(const fs::path& dir, const ClassifyOptions& opts) {
  DemoResult r;
  r.fixture = load_demo_fixture(dir);

  std::vector<features::RawFeatures> raw;
  std::vector<std::string> labels;
  std::vector<std::string> ids;
  for (const auto& item : r.fixture.training) {
    raw.push_back(features::extract_raw(features::read_image(item.path)));
    labels.push_back(item.label);
    ids.push_back(item.path.filename().string());
  }
  r.training = make_training_set(raw, labels, ids);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    r.training_features.push_back(features::finalize(raw[i], r.training.bounds, ids[i], labels[i]));
  }
  r.test_features = features::extract_features(r.fixture.test.path, r.training.bounds, r.fixture.test.label);
  r.test_features.source_id = r.fixture.test.path.filename().string();

  const auto v0 = r.test_features.values();
  r.table = knn::distance_table(v0, r.training.vectors, opts.config.distance_bits);
  r.ranking.resize(r.table.size());
  std::iota(r.ranking.begin(), r.ranking.end(), std::size_t{1});
  std::stable_sort(r.ranking.begin(), r.ranking.end(), [&](std::size_t a, std::size_t b) {
    return r.table.quantized[a - 1] < r.table.quantized[b - 1];
  });
  r.classification = classify_vector(v0, r.training, opts);
  return r;
}

namespace {

std::string binary(std::size_t value, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((value >> i) & 1U) s[static_cast<std::size_t>(width - 1 - i)] = '1';
  }
  return s;
}

}  // namespace

void print_demo(std::ostream& os, const DemoResult& r) {
  const auto flags = os.flags();
  const std::size_t shown[] = {1, 2, 24, 78};

  os << "Feature excerpt (components 1, 2, 24, 78)\n";
  os << std::left << std::setw(5) << "index" << "  " << std::setw(20) << "image" << "  " << std::setw(9) << "label";
  for (auto c : shown) os << "  " << std::setw(8) << ("v" + std::to_string(c));
  os << std::right << '\n';
  auto row = [&](const std::string& index, const features::FeatureVector& f) {
    os << std::left << std::setw(5) << index << "  " << std::setw(20) << f.source_id << "  " << std::setw(9)
       << f.label.value_or("?") << std::right;
    for (auto c : shown) os << "  " << std::fixed << std::setprecision(6) << f.components[c - 1];
    os << '\n';
  };
  row("test", r.test_features);
  for (std::size_t j = 0; j < r.training_features.size(); ++j) row(std::to_string(j + 1), r.training_features[j]);

  const int m = qsim::index_width(r.table.size());
  os << "\nDistance ranking (b=" << r.table.bits << ")\n";
  os << "rank  index  label      distance   code\n";
  for (std::size_t x = 0; x < r.ranking.size(); ++x) {
    const auto j = r.ranking[x];
    os << std::setw(4) << x + 1 << "  " << std::setw(5) << j << "  " << std::left << std::setw(9)
       << r.training.labels[j - 1] << std::right << "  " << std::fixed << std::setprecision(6)
       << r.table.exact[j - 1] << "  " << std::setw(5) << r.table.quantized[j - 1] << '\n';
  }

  const auto& c = r.classification;
  os << "\nSearch: " << c.search.grover_iterations << " Grover iterations of budget " << c.search.budget << ", "
     << c.search.measurements << " measurements\n";
  os << "Winning indexes:";
  for (auto j : c.winners) os << ' ' << binary(j, m);
  os << "  (decimal";
  for (auto j : c.winners) os << ' ' << j;
  os << ")\n";
  os << "Predicted label: " << c.label << " (expected " << r.fixture.test.label << ")\n";
  os.flags(flags);
}

}  // namespace qknn::pipeline
