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

#include "qknn/knn/amplitude_estimation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qknn/error.hpp"

namespace qknn::knn {

namespace {

// Above this width Q is applied gate by gate instead of as a compiled matrix.
constexpr int kDenseCompileLimit = 10;

}  // namespace

AeConfig AeConfig::from_delta(double delta) {
  if (!(delta > 0.0)) throw Error("amplitude estimation error bound must be positive");
  const double needed = std::numbers::pi * (std::numbers::pi + 1.0) / delta;
  AeConfig cfg;
  cfg.phase_qubits = 1;
  while (static_cast<double>(cfg.grover_applications()) < needed) ++cfg.phase_qubits;
  return cfg;
}

StatePreparation rotation_preparation(double amplitude) {
  if (!(amplitude >= 0.0 && amplitude <= 1.0)) throw Error("amplitude must lie in [0, 1]");
  StatePreparation p;
  p.circuit.append(qsim::gates::Ry{0, 2.0 * std::asin(amplitude)});
  p.width = 1;
  p.marked_qubit = 0;
  return p;
}

qsim::Circuit grover_operator(const StatePreparation& prep) {
  const qsim::Register work{"work", 0, prep.width};
  const qsim::Register marked{"marked", prep.marked_qubit, 1};
  qsim::Circuit q;
  q.append(qsim::gates::PhaseOracle{marked, [](std::uint64_t v) { return v == 1; }, "S_chi"});
  q.append(prep.circuit.inverse());
  q.append(qsim::gates::PhaseOracle{work, [](std::uint64_t v) { return v == 0; }, "S_0"});
  q.append(prep.circuit);
  q.append(qsim::gates::GlobalPhase{std::numbers::pi});
  return q;
}

double phase_to_estimate(std::uint64_t y, int phase_qubits) {
  const double s = std::sin(std::numbers::pi * static_cast<double>(y) /
                            static_cast<double>(std::uint64_t{1} << phase_qubits));
  return s * s;
}

std::vector<double> ae_phase_distribution(const StatePreparation& prep, const AeConfig& cfg, int qubit_cap) {
  if (cfg.phase_qubits < 1) throw Error("amplitude estimation needs at least one phase qubit");
  if (prep.width < 1 || prep.marked_qubit < 0 || prep.marked_qubit >= prep.width) {
    throw Error("invalid state preparation register");
  }
  const int w = prep.width;
  const int t = cfg.phase_qubits;
  if (w + t > qubit_cap) {
    throw CapacityError("amplitude estimation needs " + std::to_string(w + t) + " qubits, cap is " +
                        std::to_string(qubit_cap));
  }
  const qsim::Register phase{"phase", w, t};

  qsim::StateVector s(w + t, qubit_cap);
  s.apply(prep.circuit);
  for (int k = 0; k < t; ++k) s.apply(qsim::Gate{qsim::gates::H{phase.qubit(k)}, {}});

  const qsim::Circuit q = grover_operator(prep);
  if (w <= kDenseCompileLimit) {
    std::vector<int> targets(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) targets[static_cast<std::size_t>(i)] = i;
    Eigen::MatrixXcd power = qsim::unitary_of(q, w);
    for (int k = 0; k < t; ++k) {
      s.apply(qsim::Gate{qsim::gates::Unitary{targets, power, "Q^" + std::to_string(1ULL << k)},
                         {{phase.qubit(k), true}}});
      if (k + 1 < t) power = (power * power).eval();
    }
  } else {
    for (int k = 0; k < t; ++k) {
      const qsim::Control ctrl{phase.qubit(k), true};
      const auto cq = q.controlled(std::span<const qsim::Control>(&ctrl, 1));
      for (std::uint64_t rep = 0; rep < (std::uint64_t{1} << k); ++rep) s.apply(cq);
    }
  }
  s.apply(qsim::qft(phase).inverse());
  return s.distribution(phase);
}

AeResult amplitude_estimate(const StatePreparation& prep, const AeConfig& cfg, qsim::Rng& rng, int qubit_cap) {
  const auto dist = ae_phase_distribution(prep, cfg, qubit_cap);
  const std::uint64_t y = qsim::sample_index(dist, rng);
  AeResult r;
  r.phase = y;
  r.estimate = phase_to_estimate(y, cfg.phase_qubits);
  r.grover_applications = cfg.grover_applications();
  r.oracle_calls = kOraclesPerGroverOperator * r.grover_applications;
  return r;
}

}  // namespace qknn::knn
