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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qknn/knn/amplitude_estimation.hpp"
#include "qknn/knn/distance.hpp"
#include "qknn/knn/encoding.hpp"
#include "qknn/qsim/state_vector.hpp"

namespace qknn::knn {

enum class Backend {
  // Whole statevector pipeline: prepared states, per-index swap test and
  // amplitude estimation fill the distance register.
  full_circuit,
  // Exact distances are loaded into the distance register; only the search
  // runs as a circuit.
  oracle_level,
};

Backend parse_backend(const std::string& name);
std::string to_string(Backend b);

struct QknnConfig {
  int distance_bits = 8;        // b
  int phase_qubits = 10;        // t, b + 2 by default
  double budget_multiplier = 1.0;  // c in c * ceil(sqrt(kM))
  int qubit_cap = qsim::kDefaultQubitCap;
  // Widest swap-test preparation run directly through amplitude estimation;
  // wider ones use the single-qubit preparation with the same amplitude.
  int ae_circuit_width_limit = 7;

  void validate() const;
};

// Index register holding j = 1..M in uniform superposition, entangled with a
// distance register holding the b-bit code of d(v0, v_j).
struct Sigma {
  std::size_t count = 0;    // M
  int index_qubits = 1;     // m
  int distance_bits = 8;    // b
  std::vector<std::uint64_t> codes;  // codes[j-1]
  std::vector<double> distances;     // exact (oracle) or estimated (full circuit)
  std::uint64_t ae_grover_applications = 0;
  std::uint64_t ae_oracle_calls = 0;

  // M^{-1/2} sum_j |j>|code_j>, index register low. Empty when it would not
  // fit within `qubit_cap`.
  std::optional<qsim::StateVector> state(int qubit_cap = qsim::kDefaultQubitCap) const;
};

Sigma sigma_from_table(const DistanceTable& table);

Sigma build_sigma(std::span<const double> test_vector, std::span<const Vector> training,
                  const QknnConfig& cfg, Backend backend, qsim::Rng& rng);

}  // namespace qknn::knn
