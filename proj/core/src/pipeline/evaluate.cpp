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

#include "qknn/pipeline/evaluate.hpp"

#include <iomanip>
#include <numeric>
#include <ostream>

#include "qknn/error.hpp"
#include "qknn/pipeline/classifier.hpp"

namespace qknn::pipeline {

namespace {

double mean(const std::vector<double>& xs) {
  return xs.empty() ? 0.0 : std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

}  // namespace

double EvalCell::mean_accuracy() const { return mean(accuracy); }
double EvalCell::mean_classical_accuracy() const { return mean(classical_accuracy); }

std::vector<Sample> extract_samples(const Dataset& dataset) {
  std::vector<Sample> out;
  std::vector<std::string> failures;
  for (const auto& item : dataset.items) {
    try {
      out.push_back({item.path.string(), item.label, features::extract_raw(features::read_image(item.path))});
    } catch (const Error& e) {
      failures.push_back(e.what());
    }
  }
  if (!failures.empty()) {
    std::string msg = "failed to read " + std::to_string(failures.size()) + " image(s):";
    for (const auto& f : failures) msg += "\n  " + f;
    throw StageError("features", msg);
  }
  return out;
}

EvalReport evaluate(std::span<const Sample> samples, const EvalOptions& opts) {
  if (opts.k_grid.empty() || opts.ratio_grid.empty()) throw Error("evaluation grids must be nonempty");
  if (opts.trials < 1) throw Error("at least one trial is required");
  opts.config.validate();

  std::vector<std::string> labels;
  for (const auto& s : samples) labels.push_back(s.label);

  EvalReport report;
  for (std::size_t ri = 0; ri < opts.ratio_grid.size(); ++ri) {
    for (const auto k : opts.k_grid) report.cells.push_back({k, opts.ratio_grid[ri], {}, {}});
  }

  for (std::size_t trial = 0; trial < opts.trials; ++trial) {
    for (std::size_t ri = 0; ri < opts.ratio_grid.size(); ++ri) {
      const double ratio = opts.ratio_grid[ri];
      const std::uint64_t split_seed = mix_seed(opts.seed, trial * opts.ratio_grid.size() + ri);
      report.split_seeds.push_back(split_seed);
      const auto train_mask = stratified_split(labels, ratio, split_seed);

      std::vector<features::RawFeatures> raw;
      std::vector<std::string> train_labels;
      std::vector<std::string> train_ids;
      std::vector<std::size_t> test;
      for (std::size_t i = 0; i < samples.size(); ++i) {
        if (train_mask[i]) {
          raw.push_back(samples[i].raw);
          train_labels.push_back(samples[i].label);
          train_ids.push_back(samples[i].id);
        } else {
          test.push_back(i);
        }
      }
      const TrainingSet training = make_training_set(raw, train_labels, train_ids);

      std::vector<knn::Vector> test_vectors;
      for (const auto i : test) test_vectors.push_back(features::finalize(samples[i].raw, training.bounds, {}).values());

      for (std::size_t ki = 0; ki < opts.k_grid.size(); ++ki) {
        const std::size_t k = opts.k_grid[ki];
        if (k > training.size()) {
          throw Error("k=" + std::to_string(k) + " exceeds training size " + std::to_string(training.size()));
        }
        Tally cell_q;
        Tally cell_c;
        for (std::size_t x = 0; x < test.size(); ++x) {
          const Sample& s = samples[test[x]];
          ClassifyOptions co{k, opts.backend, opts.config, mix_seed(split_seed, (ki << 32) + x)};
          const auto q = classify_vector(test_vectors[x], training, co);
          const auto c = classical_knn(test_vectors[x], training.vectors, training.labels, k);

          EvalRow row{trial, ratio, k, s.id, s.label, q.label, c.label, q.winners,
                      q.search.grover_iterations, q.search.budget};
          const bool ok = row.correct();
          cell_q.correct += ok;
          ++cell_q.total;
          cell_c.correct += (c.label == s.label);
          ++cell_c.total;
          report.per_class[s.label].correct += ok;
          ++report.per_class[s.label].total;
          report.rows.push_back(std::move(row));
        }
        auto& cell = report.cells[ri * opts.k_grid.size() + ki];
        cell.accuracy.push_back(cell_q.accuracy());
        cell.classical_accuracy.push_back(cell_c.accuracy());
        report.overall.correct += cell_q.correct;
        report.overall.total += cell_q.total;
        report.classical_overall.correct += cell_c.correct;
        report.classical_overall.total += cell_c.total;
      }
    }
  }
  return report;
}

EvalReport evaluate(const Dataset& dataset, const EvalOptions& opts) {
  const auto samples = extract_samples(dataset);
  return evaluate(samples, opts);
}

void write_report_csv(std::ostream& os, const EvalReport& report) {
  os << "trial,ratio,k,source_id,true_label,predicted,classical,winners,grover_iterations,budget\n";
  for (const auto& r : report.rows) {
    os << r.trial << ',' << r.ratio << ',' << r.k << ',' << '"' << r.source_id << '"' << ',' << r.truth << ','
       << r.predicted << ',' << r.classical << ',';
    for (std::size_t i = 0; i < r.winners.size(); ++i) os << (i ? " " : "") << r.winners[i];
    os << ',' << r.grover_iterations << ',' << r.budget << '\n';
  }
}

void write_report_summary(std::ostream& os, const EvalReport& report, const EvalOptions& opts) {
  const auto flags = os.flags();
  os << std::fixed << std::setprecision(4);
  os << "backend " << knn::to_string(opts.backend) << ", b=" << opts.config.distance_bits
     << ", t=" << opts.config.phase_qubits << ", c=" << opts.config.budget_multiplier << ", trials "
     << opts.trials << ", seed " << opts.seed << "\n\n";
  os << "ratio  k   accuracy  classical\n";
  for (const auto& cell : report.cells) {
    os << std::setw(5) << std::setprecision(2) << cell.ratio << std::setprecision(4) << "  " << std::setw(2)
       << cell.k << "  " << std::setw(8) << cell.mean_accuracy() << "  " << std::setw(9)
       << cell.mean_classical_accuracy() << '\n';
  }
  os << "\nper class\n";
  for (const auto& [label, t] : report.per_class) {
    os << "  " << label << ": " << t.correct << '/' << t.total << " = " << t.accuracy() << '\n';
  }
  os << "overall: " << report.overall.correct << '/' << report.overall.total << " = "
     << report.overall.accuracy() << '\n';
  os << "classical overall: " << report.classical_overall.correct << '/' << report.classical_overall.total
     << " = " << report.classical_overall.accuracy() << '\n';
  os.flags(flags);
}

}  // namespace qknn::pipeline
