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
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "qknn/qsim/circuit.hpp"
#include "qknn/qsim/gate.hpp"
#include "qknn/qsim/layout.hpp"

namespace qknn::qsim {

using Rng = std::mt19937_64;

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kMatrixTolerance = 1e-12;

// Dense amplitude vector over `num_qubits` qubits. Basis index bit q is the
// computational value of qubit q.
class StateVector {
 public:
  // |0...0> on `num_qubits` qubits.
  explicit StateVector(int num_qubits, int qubit_cap = kDefaultQubitCap);

  static StateVector basis(int num_qubits, std::uint64_t index);
  // Length must be a power of two; the amplitudes are taken as given.
  static StateVector from_amplitudes(std::vector<amplitude> amps);
  // `low` occupies qubits [0, low.num_qubits()), `high` the qubits above.
  static StateVector tensor(const StateVector& low, const StateVector& high);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const amplitude> amplitudes() const { return amps_; }
  amplitude operator[](std::size_t i) const { return amps_[i]; }
  amplitude& operator[](std::size_t i) { return amps_[i]; }

  double norm_squared() const;
  void normalize();
  amplitude inner(const StateVector& other) const;  // <this|other>

  void apply(const Gate& g);
  void apply(const Circuit& c);

  // Born probability of `outcome` on `qubit`; no collapse.
  double probability(int qubit, int outcome) const;
  // Probability that every listed control holds.
  double probability(std::span<const Control> condition) const;
  // Marginal distribution of the register value.
  std::vector<double> distribution(const Register& reg) const;

  // Samples the register, collapses and renormalizes. Returns the outcome.
  std::uint64_t measure(const Register& reg, Rng& rng);
  // Zeroes every amplitude violating `condition` and renormalizes.
  // Returns the probability of the condition before projection.
  double project(std::span<const Control> condition);
  // Conditional state on the qubits not named in `condition`, renormalized;
  // the remaining qubits keep their relative order.
  StateVector reduce(std::span<const Control> condition) const;

 private:
  StateVector(int num_qubits, std::vector<amplitude> amps);

  int num_qubits_;
  std::vector<amplitude> amps_;
};

// Draws an index with probability proportional to its weight. Zero-weight
// entries are never returned.
std::uint64_t sample_index(std::span<const double> weights, Rng& rng);

// Value-semantics wrappers.
StateVector apply_gate(StateVector state, const Gate& g);
double marginal_probability(const StateVector& state, int qubit, int outcome);
std::pair<std::uint64_t, StateVector> measure_register(StateVector state, const Register& reg,
                                                       Rng& rng);
StateVector quantum_comparator(StateVector state, const Register& reg, std::uint64_t bound,
                               int flag_above, int flag_zero);

}  // namespace qknn::qsim
