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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qknn/error.hpp"
#include "qknn/features/feature_vector.hpp"
#include "qknn/knn/distance.hpp"
#include "qknn/knn/search.hpp"
#include "qknn/knn/state_prep.hpp"
#include "qknn/pipeline/classifier.hpp"
#include "qknn/pipeline/config.hpp"
#include "qknn/pipeline/dataset.hpp"
#include "qknn/pipeline/evaluate.hpp"
#include "qknn/pipeline/paper_demo.hpp"

namespace fs = std::filesystem;
using namespace qknn;

namespace {

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

fs::path bounds_path_for(const fs::path& csv) { return fs::path(csv.string() + ".bounds"); }

knn::QknnConfig config_from(const std::string& path) {
  return path.empty() ? knn::QknnConfig{} : pipeline::load_config(path);
}

void print_warnings(const pipeline::Dataset& d) {
  for (const auto& w : d.warnings) std::cerr << "warning: " << w << '\n';
}

int run_features(const fs::path& dir, const fs::path& out) {
  const auto dataset = pipeline::load_dataset(dir);
  print_warnings(dataset);
  const auto samples = pipeline::extract_samples(dataset);
  std::vector<features::RawFeatures> raw;
  std::vector<std::string> labels, ids;
  for (const auto& s : samples) {
    raw.push_back(s.raw);
    labels.push_back(s.label);
    ids.push_back(fs::relative(s.id, dir).generic_string());
  }
  const auto training = pipeline::make_training_set(raw, labels, ids);
  std::vector<features::FeatureVector> rows;
  for (std::size_t i = 0; i < raw.size(); ++i) rows.push_back(features::finalize(raw[i], training.bounds, ids[i], labels[i]));

  auto csv = open_out(out);
  features::write_feature_csv(csv, rows);
  auto bounds = open_out(bounds_path_for(out));
  features::write_bounds(bounds, training.bounds);
  std::cout << "wrote " << rows.size() << " feature vectors to " << out.string() << " (bounds in "
            << bounds_path_for(out).string() << ")\n";
  return 0;
}

pipeline::TrainingSet load_training(const fs::path& train) {
  if (fs::is_directory(train)) {
    const auto dataset = pipeline::load_dataset(train);
    print_warnings(dataset);
    const auto samples = pipeline::extract_samples(dataset);
    std::vector<features::RawFeatures> raw;
    std::vector<std::string> labels, ids;
    for (const auto& s : samples) {
      raw.push_back(s.raw);
      labels.push_back(s.label);
      ids.push_back(s.id);
    }
    return pipeline::make_training_set(raw, labels, ids);
  }
  std::ifstream csv(train);
  if (!csv) throw Error("cannot open training data " + train.string());
  std::ifstream bounds(bounds_path_for(train));
  if (!bounds) throw Error("missing texture bounds sidecar " + bounds_path_for(train).string());
  const auto rows = features::read_feature_csv(csv);
  return pipeline::training_from_features(rows, features::read_bounds(bounds));
}

struct ClassifyArgs {
  std::string image;
  std::string train;
  std::size_t k = 3;
  std::string mode = "oracle";
  std::uint64_t seed = 0;
  std::string config;
  std::string distances;
  std::string trace;
  std::string circuit;
};

int run_classify(const ClassifyArgs& a) {
  const auto training = load_training(a.train);
  pipeline::ClassifyOptions opts{a.k, knn::parse_backend(a.mode), config_from(a.config), a.seed};
  const auto v0 = features::extract_features(fs::path(a.image), training.bounds).values();
  const auto result = pipeline::classify_vector(v0, training, opts);

  std::cout << "label " << result.label << "\nwinners";
  for (auto j : result.winners) std::cout << ' ' << j << " (" << training.labels[j - 1] << ')';
  std::cout << "\ngrover_iterations " << result.search.grover_iterations << " budget " << result.search.budget
            << "\n";
  if (opts.backend == knn::Backend::full_circuit) {
    std::cout << "amplitude_estimation_oracle_calls " << result.sigma.ae_oracle_calls << '\n';
  }

  if (!a.distances.empty()) {
    auto out = open_out(a.distances);
    if (opts.backend == knn::Backend::oracle_level) {
      knn::write_distance_csv(out, knn::distance_table(v0, training.vectors, opts.config.distance_bits));
    } else {
      knn::DistanceTable t{result.sigma.distances, result.sigma.codes, result.sigma.distance_bits};
      knn::write_distance_csv(out, t);
    }
  }
  if (!a.trace.empty()) {
    auto out = open_out(a.trace);
    knn::write_trace(out, result.search);
  }
  if (!a.circuit.empty()) {
    auto out = open_out(a.circuit);
    out << "# test-vector preparation\n";
    knn::prepare_alpha(v0, opts.config.qubit_cap).circuit.dump(out);
    out << "# training-set preparation\n";
    knn::prepare_beta(training.vectors, opts.config.qubit_cap).circuit.dump(out);
  }
  return 0;
}

struct EvaluateArgs {
  std::string data;
  std::vector<std::size_t> k{3, 5, 7, 9};
  std::vector<double> ratio{0.5, 0.7, 0.9};
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::string mode = "oracle";
  std::string config;
  std::string report;
};

int run_evaluate(const EvaluateArgs& a) {
  const auto dataset = pipeline::load_dataset(a.data);
  print_warnings(dataset);
  pipeline::EvalOptions opts;
  opts.k_grid = a.k;
  opts.ratio_grid = a.ratio;
  opts.trials = a.trials;
  opts.seed = a.seed;
  opts.backend = knn::parse_backend(a.mode);
  opts.config = config_from(a.config);
  const auto report = pipeline::evaluate(dataset, opts);

  pipeline::write_report_summary(std::cout, report, opts);
  if (!a.report.empty()) {
    fs::path csv_path(a.report);
    auto csv = open_out(csv_path);
    pipeline::write_report_csv(csv, report);
    auto summary_path = csv_path;
    summary_path.replace_extension(".summary.txt");
    auto summary = open_out(summary_path);
    pipeline::write_report_summary(summary, report, opts);
    std::cout << "\nreport: " << csv_path.string() << "\nsummary: " << summary_path.string() << '\n';
  }
  return 0;
}

struct DemoArgs {
  std::string fixtures = QKNN_DEFAULT_FIXTURES;
  std::size_t k = 3;
  std::string mode = "oracle";
  std::uint64_t seed = 1;
  std::string config;
};

int run_demo(const DemoArgs& a) {
  pipeline::ClassifyOptions opts{a.k, knn::parse_backend(a.mode), config_from(a.config), a.seed};
  const auto result = pipeline::run_paper_demo(a.fixtures, opts);
  pipeline::print_demo(std::cout, result);
  return result.classification.label == result.fixture.test.label ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum k-nearest-neighbor image classifier (statevector simulation)"};
  app.require_subcommand(1);

  std::string features_dir, features_out;
  auto* features_cmd = app.add_subcommand("features", "Extract 80-dimensional feature vectors from a class-per-directory dataset");
  features_cmd->add_option("dir", features_dir, "Dataset root")->required()->check(CLI::ExistingDirectory);
  features_cmd->add_option("--out", features_out, "Output CSV")->required();

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one image against a training set");
  classify_cmd->add_option("image", ca.image, "Test image")->required()->check(CLI::ExistingFile);
  classify_cmd->add_option("--train", ca.train, "Training dataset directory or feature CSV")->required()->check(CLI::ExistingPath);
  classify_cmd->add_option("--k", ca.k, "Number of neighbors")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--mode", ca.mode, "Simulation backend")->check(CLI::IsMember({"full", "oracle"}));
  classify_cmd->add_option("--seed", ca.seed, "RNG seed");
  classify_cmd->add_option("--config", ca.config, "key=value register/budget config")->check(CLI::ExistingFile);
  classify_cmd->add_option("--dump-distances", ca.distances, "Write index,exact,quantized CSV");
  classify_cmd->add_option("--trace", ca.trace, "Write the search trace");
  classify_cmd->add_option("--dump-circuit", ca.circuit, "Write the state-preparation circuits");

  EvaluateArgs ea;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Sweep k and training ratio over seeded trials");
  evaluate_cmd->add_option("--data", ea.data, "Dataset root")->required()->check(CLI::ExistingDirectory);
  evaluate_cmd->add_option("--k", ea.k, "k grid, comma separated")->delimiter(',');
  evaluate_cmd->add_option("--ratio", ea.ratio, "Training ratio grid, comma separated")->delimiter(',');
  evaluate_cmd->add_option("--trials", ea.trials, "Trials per cell")->check(CLI::PositiveNumber);
  evaluate_cmd->add_option("--seed", ea.seed, "Base seed");
  evaluate_cmd->add_option("--mode", ea.mode, "Simulation backend")->check(CLI::IsMember({"full", "oracle"}));
  evaluate_cmd->add_option("--config", ea.config, "key=value register/budget config")->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--report", ea.report, "CSV report path; a .summary.txt is written alongside");

  DemoArgs da;
  auto* demo_cmd = app.add_subcommand("demo-paper", "Ten-image airplanes/Leopards walkthrough on bundled fixtures");
  demo_cmd->add_option("--fixtures", da.fixtures, "Fixture directory with manifest.txt")->check(CLI::ExistingDirectory);
  demo_cmd->add_option("--k", da.k, "Number of neighbors")->check(CLI::PositiveNumber);
  demo_cmd->add_option("--mode", da.mode, "Simulation backend")->check(CLI::IsMember({"full", "oracle"}));
  demo_cmd->add_option("--seed", da.seed, "RNG seed");
  demo_cmd->add_option("--config", da.config, "key=value register/budget config")->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*features_cmd) return run_features(features_dir, features_out);
    if (*classify_cmd) return run_classify(ca);
    if (*evaluate_cmd) return run_evaluate(ea);
    if (*demo_cmd) return run_demo(da);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
