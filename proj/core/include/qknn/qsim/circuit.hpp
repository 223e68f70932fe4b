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
#include <ostream>
#include <span>
#include <vector>

#include "qknn/qsim/gate.hpp"

namespace qknn::qsim {

// An ordered gate list. Circuits are plain values and can be copied, inverted
// and conditioned on extra controls.
class Circuit {
 public:
  Circuit() = default;

  Circuit& append(Gate g);
  Circuit& append(GateKind op, std::vector<Control> controls = {});
  Circuit& append(const Circuit& other);

  Circuit inverse() const;
  Circuit controlled(std::span<const Control> extra) const;

  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  auto begin() const { return gates_.begin(); }
  auto end() const { return gates_.end(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  // Text trace, one gate per line.
  void dump(std::ostream& os) const;

 private:
  std::vector<Gate> gates_;
};

// Quantum Fourier transform on `reg` (little-endian value convention):
// |x> -> 2^{-t/2} sum_y e^{2 pi i x y / 2^t} |y>.
Circuit qft(const Register& reg);

// Dense matrix of `c` acting on `num_qubits` qubits, built column by column.
Eigen::MatrixXcd unitary_of(const Circuit& c, int num_qubits);

}  // namespace qknn::qsim
