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

#include "qknn/knn/sigma.hpp"

#include <cmath>

#include "qknn/error.hpp"
#include "qknn/knn/state_prep.hpp"
#include "qknn/knn/swap_test.hpp"

namespace qknn::knn {

Backend parse_backend(const std::string& name) {
  if (name == "full" || name == "full_circuit") return Backend::full_circuit;
  if (name == "oracle" || name == "oracle_level") return Backend::oracle_level;
  throw Error("unknown backend '" + name + "' (expected full or oracle)");
}

std::string to_string(Backend b) { return b == Backend::full_circuit ? "full" : "oracle"; }

void QknnConfig::validate() const {
  if (distance_bits < 1 || distance_bits > kMaxDistanceBits) throw Error("b must lie in [1, 52]");
  if (phase_qubits < 1) throw Error("t must be at least 1");
  if (!(budget_multiplier > 0.0) || !std::isfinite(budget_multiplier)) throw Error("c must be positive");
  if (qubit_cap < 2 || qubit_cap > 40) throw Error("qubit cap must lie in [2, 40]");
  if (ae_circuit_width_limit < 1) throw Error("ae_circuit_width_limit must be positive");
}

std::optional<qsim::StateVector> Sigma::state(int qubit_cap) const {
  const int total = index_qubits + distance_bits;
  if (total > qubit_cap) return std::nullopt;
  qsim::StateVector s(total, qubit_cap);
  s[0] = 0.0;
  const double a = 1.0 / std::sqrt(static_cast<double>(count));
  for (std::size_t j = 1; j <= count; ++j) s[(codes[j - 1] << index_qubits) | j] = a;
  return s;
}

Sigma sigma_from_table(const DistanceTable& table) {
  if (table.size() == 0) throw Error("empty distance table");
  Sigma s;
  s.count = table.size();
  s.index_qubits = qsim::index_width(table.size());
  s.distance_bits = table.bits;
  s.codes = table.quantized;
  s.distances = table.exact;
  return s;
}

namespace {

StatePreparation swap_test_preparation(std::span<const double> test_vector, std::span<const double> train) {
  const int n = qsim::index_width(test_vector.size());
  const qsim::Register a{"test", 0, n};
  const qsim::Register b{"train", n, n};
  const int anc = 2 * n;
  StatePreparation p;
  p.circuit.append(amplitude_loader(test_vector, a));
  p.circuit.append(amplitude_loader(train, b));
  p.circuit.append(swap_test_circuit(a, b, anc));
  p.width = 2 * n + 1;
  p.marked_qubit = anc;
  return p;
}

Sigma full_circuit_sigma(std::span<const double> test_vector, std::span<const Vector> training,
                         const QknnConfig& cfg, qsim::Rng& rng) {
  const std::size_t M = training.size();
  const int n = qsim::index_width(test_vector.size());
  const int m = qsim::index_width(M);
  if (beta_qubits(M, test_vector.size()) > cfg.qubit_cap || 2 * n + m + 1 > cfg.qubit_cap) {
    throw CapacityError("full-circuit mode needs " +
                        std::to_string(std::max(beta_qubits(M, test_vector.size()), 2 * n + m + 1)) +
                        " qubits for M=" + std::to_string(M) + ", N=" + std::to_string(test_vector.size()) +
                        "; cap is " + std::to_string(cfg.qubit_cap));
  }

  const auto alpha = prepare_alpha(test_vector, cfg.qubit_cap);
  const auto beta = prepare_beta(training, cfg.qubit_cap);
  const auto gamma = swap_test_per_index(beta.encoded_vectors(), M, alpha.encoded_vectors(), cfg.qubit_cap);
  const auto circuit_distances = gamma.distances();

  Sigma s;
  s.count = M;
  s.index_qubits = m;
  s.distance_bits = cfg.distance_bits;
  const AeConfig ae{cfg.phase_qubits};
  const bool direct = 2 * n + 1 <= cfg.ae_circuit_width_limit;
  for (std::size_t j = 0; j < M; ++j) {
    const StatePreparation prep = direct ? swap_test_preparation(test_vector, training[j])
                                         : rotation_preparation(std::sqrt(std::max(0.0, circuit_distances[j])));
    const AeResult r = amplitude_estimate(prep, ae, rng, cfg.qubit_cap);
    s.distances.push_back(r.estimate);
    s.codes.push_back(quantize_distance(r.estimate, cfg.distance_bits));
    s.ae_grover_applications += r.grover_applications;
    s.ae_oracle_calls += r.oracle_calls;
  }
  return s;
}

}  // namespace

Sigma build_sigma(std::span<const double> test_vector, std::span<const Vector> training, const QknnConfig& cfg,
                  Backend backend, qsim::Rng& rng) {
  cfg.validate();
  if (training.empty()) throw Error("no training vectors");
  for (const auto& v : training) {
    if (v.size() != test_vector.size()) throw Error("training and test vectors differ in dimension");
  }
  if (backend == Backend::oracle_level) {
    return sigma_from_table(distance_table(test_vector, training, cfg.distance_bits));
  }
  return full_circuit_sigma(test_vector, training, cfg, rng);
}

}  // namespace qknn::knn
