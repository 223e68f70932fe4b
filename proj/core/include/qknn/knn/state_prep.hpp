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

#include <span>
#include <vector>

#include "qknn/knn/encoding.hpp"
#include "qknn/qsim/circuit.hpp"
#include "qknn/qsim/layout.hpp"
#include "qknn/qsim/state_vector.hpp"

namespace qknn::knn {

// Register names used by the prepared test and training states.
namespace reg {
inline constexpr const char* kFeature = "i";        // feature position 1..N
inline constexpr const char* kTraining = "j";       // training index 1..M
inline constexpr const char* kFeatureAbove = "i_above";
inline constexpr const char* kFeatureZero = "i_zero";
inline constexpr const char* kTrainingAbove = "j_above";
inline constexpr const char* kTrainingZero = "j_zero";
inline constexpr const char* kValue = "value";      // rotation work qubit, uncomputed
inline constexpr const char* kAmplitude = "amplitude";
}  // namespace reg

// A state together with the layout and circuit that produced it from |0...0>.
struct PreparedState {
  qsim::StateVector state;
  qsim::Layout layout;
  qsim::Circuit circuit;

  // Conditions under which every comparator flag reads 0.
  std::vector<qsim::Control> flags_clear() const;
  double flag_clear_probability() const;
  // Projection onto the flag-clear branch (all qubits kept), renormalized.
  qsim::StateVector flag_clear_branch() const;
  // Mass on the work register outside |0>.
  double work_register_residual() const;
  // Flag-clear, work-clear, amplitude-qubit-|1> branch with those qubits
  // removed. For unit-norm inputs this is sum_i v_i |i>, or
  // M^{-1/2} sum_j |j> sum_i v_ji |i> for the training state (i low, j high).
  qsim::StateVector encoded_vectors() const;
};

// Index superposition over the feature register, comparator flags, then the
// three rotation stages: Ry(2 v_i) onto the work qubit, Ry(2 asin v_i) onto the
// amplitude qubit, and the inverse of the first stage to clear the work qubit.
PreparedState prepare_alpha(std::span<const double> test_vector,
                            int qubit_cap = qsim::kDefaultQubitCap);

// Same construction with an outer training-index register, every rotation
// controlled on the (j, i) pair.
PreparedState prepare_beta(std::span<const Vector> training,
                           int qubit_cap = qsim::kDefaultQubitCap);

// Qubits prepare_beta needs for M vectors of dimension N.
int beta_qubits(std::size_t M, std::size_t N);

}  // namespace qknn::knn
