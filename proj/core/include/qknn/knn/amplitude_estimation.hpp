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
#include <vector>

#include "qknn/qsim/circuit.hpp"
#include "qknn/qsim/state_vector.hpp"

namespace qknn::knn {

// Accounting unit: one Grover operator inside amplitude estimation is charged
// as twelve oracle invocations.
inline constexpr std::uint64_t kOraclesPerGroverOperator = 12;

struct AeConfig {
  int phase_qubits = 10;  // t

  // R = 2^t - 1 controlled Grover-operator applications.
  std::uint64_t grover_applications() const { return (std::uint64_t{1} << phase_qubits) - 1; }

  // Smallest t whose R = 2^t - 1 satisfies R >= pi (pi + 1) / delta.
  static AeConfig from_delta(double delta);
};

// A unitary A on `width` qubits; the amplitude of interest a satisfies
// a^2 = P(marked_qubit = 1) in A|0>.
struct StatePreparation {
  qsim::Circuit circuit;
  int width = 1;
  int marked_qubit = 0;
};

// Single-qubit A = Ry(2 asin(a)): |0> -> sqrt(1 - a^2)|0> + a|1>.
StatePreparation rotation_preparation(double amplitude);

// Q = -A S_0 A^dag S_chi on the preparation register.
qsim::Circuit grover_operator(const StatePreparation& prep);

struct AeResult {
  double estimate = 0.0;  // sin^2(pi y / 2^t), an estimate of a^2
  std::uint64_t phase = 0;  // measured y
  std::uint64_t grover_applications = 0;
  std::uint64_t oracle_calls = 0;
};

// Exact distribution of the measured phase register y in 0..2^t-1, from a full
// simulation of the phase-estimation circuit: H on the phase register,
// controlled Q^(2^k), inverse QFT.
std::vector<double> ae_phase_distribution(const StatePreparation& prep, const AeConfig& cfg,
                                          int qubit_cap = qsim::kDefaultQubitCap);

// Single-shot amplitude estimation.
AeResult amplitude_estimate(const StatePreparation& prep, const AeConfig& cfg, qsim::Rng& rng,
                            int qubit_cap = qsim::kDefaultQubitCap);

double phase_to_estimate(std::uint64_t y, int phase_qubits);

}  // namespace qknn::knn
