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

#include "qknn/qsim/circuit.hpp"

#include <numbers>

#include "qknn/qsim/state_vector.hpp"

namespace qknn::qsim {

Circuit& Circuit::append(Gate g) {
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(GateKind op, std::vector<Control> controls) {
  gates_.push_back(Gate{std::move(op), std::move(controls)});
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out;
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.gates_.push_back(inverse_of(*it));
  return out;
}

Circuit Circuit::controlled(std::span<const Control> extra) const {
  Circuit out = *this;
  for (auto& g : out.gates_) g.controls.insert(g.controls.end(), extra.begin(), extra.end());
  return out;
}

void Circuit::dump(std::ostream& os) const {
  for (const auto& g : gates_) os << describe(g) << '\n';
}

Circuit qft(const Register& reg) {
  Circuit c;
  const int t = reg.width;
  for (int j = t - 1; j >= 0; --j) {
    c.append(gates::H{reg.qubit(j)});
    for (int k = j - 1; k >= 0; --k) {
      const double phi = std::numbers::pi / static_cast<double>(std::uint64_t{1} << (j - k));
      c.append(gates::Phase{reg.qubit(j), phi}, {{reg.qubit(k), true}});
    }
  }
  for (int i = 0; i < t / 2; ++i) c.append(gates::Swap{reg.qubit(i), reg.qubit(t - 1 - i)});
  return c;
}

Eigen::MatrixXcd unitary_of(const Circuit& c, int num_qubits) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  Eigen::MatrixXcd u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    auto s = StateVector::basis(num_qubits, col);
    s.apply(c);
    for (std::size_t row = 0; row < dim; ++row) {
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = s[row];
    }
  }
  return u;
}

}  // namespace qknn::qsim
