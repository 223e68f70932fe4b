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

#include "qknn/qsim/circuit.hpp"
#include "qknn/qsim/layout.hpp"
#include "qknn/qsim/state_vector.hpp"

namespace qknn::knn {

using Vector = std::vector<double>;

// Binary tree of uniformly controlled Ry rotations preparing
// sum_i values[i-1] |i> / ||values|| on `reg` from |0>. Index 0 is left empty
// so the loaded vector uses the same 1-based positions as the index registers.
// Values must be nonnegative, not all zero, and fit: size + 1 <= 2^width.
qsim::Circuit amplitude_loader(std::span<const double> values, const qsim::Register& reg);

// The state the loader prepares on a fresh register of index_width(size) qubits.
qsim::StateVector amplitude_state(std::span<const double> values);

// Clamps rounding noise just outside [0, 1] and rejects anything further out.
double checked_component(double v);

}  // namespace qknn::knn
