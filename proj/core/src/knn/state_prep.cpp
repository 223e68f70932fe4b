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

#include "qknn/knn/state_prep.hpp"

#include <cmath>
#include <string>

#include "qknn/error.hpp"

namespace qknn::knn {

namespace {

using qsim::Control;
using qsim::Gate;
namespace gates = qsim::gates;

std::vector<Control> concat(std::vector<Control> a, const std::vector<Control>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void index_superposition(qsim::Circuit& c, const qsim::Register& r, std::uint64_t bound, int above, int zero) {
  for (int q = 0; q < r.width; ++q) c.append(gates::H{r.qubit(q)});
  c.append(gates::Comparator{r, bound, above, zero});
}

// One rotation stage over every (outer, i) position: Ry(angle(v)) on `target`.
template <class AngleFn>
qsim::Circuit rotation_stage(std::span<const Vector> rows, const qsim::Register& feature,
                             const qsim::Register* outer, int target, AngleFn angle) {
  qsim::Circuit c;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const auto outer_ctrl = outer != nullptr ? qsim::controls_for_value(*outer, j + 1) : std::vector<Control>{};
    for (std::size_t i = 0; i < rows[j].size(); ++i) {
      const double v = rows[j][i];
      if (v == 0.0) continue;  // Ry(0) is the identity
      c.append(gates::Ry{target, angle(v)}, concat(outer_ctrl, qsim::controls_for_value(feature, i + 1)));
    }
  }
  return c;
}

std::vector<Vector> validated(std::span<const Vector> rows) {
  if (rows.empty()) throw Error("state preparation needs at least one vector");
  std::vector<Vector> out;
  out.reserve(rows.size());
  const std::size_t n = rows.front().size();
  if (n == 0) throw Error("state preparation needs nonempty vectors");
  for (const auto& r : rows) {
    if (r.size() != n) throw Error("training vectors must share one dimension");
    Vector v;
    v.reserve(n);
    for (double x : r) v.push_back(checked_component(x));
    out.push_back(std::move(v));
  }
  return out;
}

PreparedState assemble(std::span<const Vector> rows, bool with_outer, int cap) {
  const auto data = validated(rows);
  const std::size_t N = data.front().size();
  const std::size_t M = data.size();

  qsim::Layout layout(cap);
  const auto i_reg = layout.add(reg::kFeature, qsim::index_width(N));
  qsim::Register j_reg;
  if (with_outer) j_reg = layout.add(reg::kTraining, qsim::index_width(M));
  const auto i_above = layout.add(reg::kFeatureAbove, 1);
  const auto i_zero = layout.add(reg::kFeatureZero, 1);
  qsim::Register j_above;
  qsim::Register j_zero;
  if (with_outer) {
    j_above = layout.add(reg::kTrainingAbove, 1);
    j_zero = layout.add(reg::kTrainingZero, 1);
  }
  const auto value = layout.add(reg::kValue, 1);
  const auto amp = layout.add(reg::kAmplitude, 1);

  qsim::Circuit c;
  if (with_outer) index_superposition(c, j_reg, M, j_above.offset, j_zero.offset);
  index_superposition(c, i_reg, N, i_above.offset, i_zero.offset);

  const qsim::Register* outer = with_outer ? &j_reg : nullptr;
  const auto load = rotation_stage(data, i_reg, outer, value.offset, [](double v) { return 2.0 * v; });
  const auto encode =
      rotation_stage(data, i_reg, outer, amp.offset, [](double v) { return 2.0 * std::asin(v); });
  c.append(load);
  c.append(encode);
  c.append(load.inverse());

  qsim::StateVector s(layout.total_qubits(), cap);
  s.apply(c);
  return PreparedState{std::move(s), std::move(layout), std::move(c)};
}

}  // namespace

std::vector<Control> PreparedState::flags_clear() const {
  std::vector<Control> out;
  for (const char* name : {reg::kFeatureAbove, reg::kFeatureZero, reg::kTrainingAbove, reg::kTrainingZero}) {
    if (layout.contains(name)) out.push_back({layout[name].offset, false});
  }
  return out;
}

double PreparedState::flag_clear_probability() const { return state.probability(flags_clear()); }

qsim::StateVector PreparedState::flag_clear_branch() const {
  auto s = state;
  s.project(flags_clear());
  return s;
}

double PreparedState::work_register_residual() const { return state.probability(layout[reg::kValue].offset, 1); }

qsim::StateVector PreparedState::encoded_vectors() const {
  auto cond = flags_clear();
  cond.push_back({layout[reg::kValue].offset, false});
  cond.push_back({layout[reg::kAmplitude].offset, true});
  return state.reduce(cond);
}

int beta_qubits(std::size_t M, std::size_t N) { return qsim::index_width(M) + qsim::index_width(N) + 6; }

PreparedState prepare_alpha(std::span<const double> test_vector, int qubit_cap) {
  const Vector v(test_vector.begin(), test_vector.end());
  return assemble(std::span<const Vector>(&v, 1), false, qubit_cap);
}

PreparedState prepare_beta(std::span<const Vector> training, int qubit_cap) {
  return assemble(training, true, qubit_cap);
}

}  // namespace qknn::knn
