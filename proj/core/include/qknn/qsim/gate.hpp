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

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qknn/qsim/layout.hpp"

namespace qknn::qsim {

using amplitude = std::complex<double>;

// Conditions a gate on `qubit` being in the computational state `state`.
struct Control {
  int qubit = 0;
  bool state = true;
};

// Controls that require `reg` to hold exactly `value`.
std::vector<Control> controls_for_value(const Register& reg, std::uint64_t value);

namespace gates {

struct H {
  int target;
};

struct X {
  int target;
};

// exp(-i theta Y / 2): |0> -> cos(theta/2)|0> + sin(theta/2)|1>.
struct Ry {
  int target;
  double theta;
};

// diag(1, e^{i phi}).
struct Phase {
  int target;
  double phi;
};

// Scalar e^{i phi}; observable only once controlled.
struct GlobalPhase {
  double phi;
};

struct Swap {
  int a;
  int b;
};

// Functional comparator against a classical bound: toggles `flag_zero` when
// the register holds 0 and `flag_above` when it holds a value > bound.
// Values in 1..bound leave both flags untouched. An involution on basis states.
struct Comparator {
  Register reg;
  std::uint64_t bound;
  int flag_above;
  int flag_zero;
};

// Reflection 2|u><u| - I where |u> is the uniform superposition over the
// register values lo..hi. The full range gives the textbook Grover diffusion.
struct Diffusion {
  Register reg;
  std::uint64_t lo;
  std::uint64_t hi;
};

// Phase flip on every basis state whose register value satisfies `marked`.
struct PhaseOracle {
  Register reg;
  std::function<bool(std::uint64_t)> marked;
  std::string label = "oracle";
};

// Dense unitary on `targets`; bit q of the matrix row/column index maps to
// targets[q].
struct Unitary {
  std::vector<int> targets;
  Eigen::MatrixXcd matrix;
  std::string label = "U";
};

}  // namespace gates

using GateKind = std::variant<gates::H, gates::X, gates::Ry, gates::Phase, gates::GlobalPhase,
                              gates::Swap, gates::Comparator, gates::Diffusion,
                              gates::PhaseOracle, gates::Unitary>;

struct Gate {
  GateKind op;
  std::vector<Control> controls;
};

// Adjoint of `g`, keeping its controls.
Gate inverse_of(const Gate& g);

// Qubits the gate acts on, excluding controls. Empty for GlobalPhase.
std::vector<int> target_qubits(const Gate& g);

// One-line human-readable rendering used by circuit trace dumps.
std::string describe(const Gate& g);

}  // namespace qknn::qsim
