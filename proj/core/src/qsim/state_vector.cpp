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

#include "qknn/qsim/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qknn/error.hpp"

namespace qknn::qsim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using Index = std::uint64_t;

Index bit(int q) { return Index{1} << q; }

struct ControlMask {
  Index mask = 0;
  Index want = 0;
  bool never = false;  // contradictory controls
  bool ok(Index x) const { return !never && (x & mask) == want; }
};

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) {
    throw std::out_of_range("qubit index " + std::to_string(q) + " outside [0, " +
                            std::to_string(n) + ")");
  }
}

void check_register(const Register& r, int n) {
  if (r.width < 1) throw Error("register '" + r.name + "' has no qubits");
  check_qubit(r.offset, n);
  check_qubit(r.offset + r.width - 1, n);
}

ControlMask control_mask(const Gate& g, int n) {
  ControlMask cm;
  const auto targets = target_qubits(g);
  for (const auto& c : g.controls) {
    check_qubit(c.qubit, n);
    if (std::find(targets.begin(), targets.end(), c.qubit) != targets.end()) {
      throw Error("control qubit " + std::to_string(c.qubit) + " is also a target");
    }
    if ((cm.mask & bit(c.qubit)) != 0) {
      if (((cm.want >> c.qubit) & 1U) != static_cast<Index>(c.state)) cm.never = true;
      continue;
    }
    cm.mask |= bit(c.qubit);
    if (c.state) cm.want |= bit(c.qubit);
  }
  return cm;
}

void apply_single(std::vector<amplitude>& s, int target, const ControlMask& cm, amplitude a,
                  amplitude b, amplitude c, amplitude d) {
  const Index stride = bit(target);
  const Index size = s.size();
  for (Index x = 0; x < size; ++x) {
    if ((x & stride) != 0 || !cm.ok(x)) continue;
    const amplitude a0 = s[x];
    const amplitude a1 = s[x | stride];
    s[x] = a * a0 + b * a1;
    s[x | stride] = c * a0 + d * a1;
  }
}

}  // namespace

StateVector::StateVector(int num_qubits, int qubit_cap) : num_qubits_(num_qubits) {
  if (num_qubits < 0) throw Error("negative qubit count");
  if (num_qubits > qubit_cap) {
    throw CapacityError("state needs " + std::to_string(num_qubits) + " qubits, cap is " +
                        std::to_string(qubit_cap));
  }
  amps_.assign(std::size_t{1} << num_qubits, amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<amplitude> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  StateVector s(num_qubits, 62);
  if (index >= s.size()) throw std::out_of_range("basis index outside state");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<amplitude> amps) {
  const std::size_t n = amps.size();
  if (n == 0 || (n & (n - 1)) != 0) throw Error("amplitude count must be a power of two");
  int q = 0;
  while ((std::size_t{1} << q) < n) ++q;
  return StateVector(q, std::move(amps));
}

StateVector StateVector::tensor(const StateVector& low, const StateVector& high) {
  std::vector<amplitude> out(low.size() * high.size());
  for (std::size_t h = 0; h < high.size(); ++h) {
    for (std::size_t l = 0; l < low.size(); ++l) out[(h << low.num_qubits_) | l] = high[h] * low[l];
  }
  return StateVector(low.num_qubits_ + high.num_qubits_, std::move(out));
}

double StateVector::norm_squared() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return acc;
}

void StateVector::normalize() {
  const double n2 = norm_squared();
  if (n2 <= 0.0) throw Error("cannot normalize the zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : amps_) a *= inv;
}

amplitude StateVector::inner(const StateVector& other) const {
  if (other.num_qubits_ != num_qubits_) throw Error("inner product of states with different widths");
  amplitude acc{0.0, 0.0};
  for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
  return acc;
}

void StateVector::apply(const Circuit& c) {
  for (const auto& g : c) apply(g);
}

void StateVector::apply(const Gate& g) {
  const int n = num_qubits_;
  for (int q : target_qubits(g)) check_qubit(q, n);
  const ControlMask cm = control_mask(g, n);
  auto& s = amps_;
  const Index size = s.size();

  std::visit(
      overloaded{
          [&](const gates::H& h) {
            const double r = std::numbers::sqrt2 / 2.0;
            apply_single(s, h.target, cm, r, r, r, -r);
          },
          [&](const gates::X& x) {
            const Index stride = bit(x.target);
            for (Index i = 0; i < size; ++i) {
              if ((i & stride) == 0 && cm.ok(i)) std::swap(s[i], s[i | stride]);
            }
          },
          [&](const gates::Ry& r) {
            if (!std::isfinite(r.theta)) throw Error("non-finite rotation angle");
            const double c = std::cos(r.theta / 2.0);
            const double sn = std::sin(r.theta / 2.0);
            apply_single(s, r.target, cm, c, -sn, sn, c);
          },
          [&](const gates::Phase& p) {
            if (!std::isfinite(p.phi)) throw Error("non-finite phase angle");
            const amplitude e = std::polar(1.0, p.phi);
            const Index stride = bit(p.target);
            for (Index i = 0; i < size; ++i) {
              if ((i & stride) != 0 && cm.ok(i)) s[i] *= e;
            }
          },
          [&](const gates::GlobalPhase& p) {
            const amplitude e = std::polar(1.0, p.phi);
            for (Index i = 0; i < size; ++i) {
              if (cm.ok(i)) s[i] *= e;
            }
          },
          [&](const gates::Swap& sw) {
            if (sw.a == sw.b) return;
            const Index ba = bit(sw.a);
            const Index bb = bit(sw.b);
            for (Index i = 0; i < size; ++i) {
              if ((i & ba) != 0 && (i & bb) == 0 && cm.ok(i)) std::swap(s[i], s[i ^ ba ^ bb]);
            }
          },
          [&](const gates::Comparator& c) {
            check_register(c.reg, n);
            if (c.bound > c.reg.capacity() - 1) {
              throw Error("comparator bound " + std::to_string(c.bound) + " exceeds register '" +
                          c.reg.name + "' capacity");
            }
            if (c.flag_above == c.flag_zero || (c.reg.mask() & (bit(c.flag_above) | bit(c.flag_zero))) != 0) {
              throw Error("comparator flags must be distinct qubits outside the register");
            }
            const Index fa = bit(c.flag_above);
            const Index fz = bit(c.flag_zero);
            for (Index i = 0; i < size; ++i) {
              if (!cm.ok(i)) continue;
              const Index v = c.reg.value_of(i);
              if (v == 0 && (i & fz) == 0) std::swap(s[i], s[i | fz]);
              if (v > c.bound && (i & fa) == 0) std::swap(s[i], s[i | fa]);
            }
          },
          [&](const gates::Diffusion& d) {
            check_register(d.reg, n);
            if (d.lo > d.hi || d.hi >= d.reg.capacity()) throw Error("diffusion range outside register");
            const Index cap = d.reg.capacity();
            const double len = static_cast<double>(d.hi - d.lo + 1);
            for (Index base = 0; base < size; ++base) {
              if ((base & d.reg.mask()) != 0 || !cm.ok(base)) continue;
              amplitude sum{0.0, 0.0};
              for (Index v = d.lo; v <= d.hi; ++v) sum += s[base | (v << d.reg.offset)];
              const amplitude coef = 2.0 * sum / len;
              for (Index v = 0; v < cap; ++v) {
                auto& a = s[base | (v << d.reg.offset)];
                a = (v >= d.lo && v <= d.hi ? coef : amplitude{0.0, 0.0}) - a;
              }
            }
          },
          [&](const gates::PhaseOracle& o) {
            check_register(o.reg, n);
            for (Index i = 0; i < size; ++i) {
              if (cm.ok(i) && o.marked(o.reg.value_of(i))) s[i] = -s[i];
            }
          },
          [&](const gates::Unitary& u) {
            const std::size_t k = u.targets.size();
            const Index dim = Index{1} << k;
            if (static_cast<Index>(u.matrix.rows()) != dim || static_cast<Index>(u.matrix.cols()) != dim) {
              throw Error("unitary '" + u.label + "' has the wrong dimension for its targets");
            }
            Index tmask = 0;
            for (int t : u.targets) {
              if ((tmask & bit(t)) != 0) throw Error("repeated target in unitary '" + u.label + "'");
              tmask |= bit(t);
            }
            std::vector<Index> offsets(dim, 0);
            for (Index r = 0; r < dim; ++r) {
              for (std::size_t q = 0; q < k; ++q) {
                if ((r >> q) & 1U) offsets[r] |= bit(u.targets[q]);
              }
            }
            Eigen::VectorXcd in(static_cast<Eigen::Index>(dim));
            Eigen::VectorXcd out(static_cast<Eigen::Index>(dim));
            for (Index base = 0; base < size; ++base) {
              if ((base & tmask) != 0 || !cm.ok(base)) continue;
              for (Index r = 0; r < dim; ++r) in(static_cast<Eigen::Index>(r)) = s[base | offsets[r]];
              out.noalias() = u.matrix * in;
              for (Index r = 0; r < dim; ++r) s[base | offsets[r]] = out(static_cast<Eigen::Index>(r));
            }
          },
      },
      g.op);
}

double StateVector::probability(int qubit, int outcome) const {
  check_qubit(qubit, num_qubits_);
  const Index b = bit(qubit);
  double p = 0.0;
  for (Index i = 0; i < amps_.size(); ++i) {
    if (((i & b) != 0) == (outcome != 0)) p += std::norm(amps_[i]);
  }
  return p;
}

double StateVector::probability(std::span<const Control> condition) const {
  ControlMask cm;
  for (const auto& c : condition) {
    check_qubit(c.qubit, num_qubits_);
    cm.mask |= bit(c.qubit);
    if (c.state) cm.want |= bit(c.qubit);
  }
  double p = 0.0;
  for (Index i = 0; i < amps_.size(); ++i) {
    if (cm.ok(i)) p += std::norm(amps_[i]);
  }
  return p;
}

std::vector<double> StateVector::distribution(const Register& reg) const {
  check_register(reg, num_qubits_);
  std::vector<double> p(reg.capacity(), 0.0);
  for (Index i = 0; i < amps_.size(); ++i) p[reg.value_of(i)] += std::norm(amps_[i]);
  return p;
}

std::uint64_t sample_index(std::span<const double> weights, Rng& rng) {
  double total = 0.0;
  for (double v : weights) total += v;
  if (!(total > 0.0)) throw Error("cannot sample from an all-zero distribution");
  std::uniform_real_distribution<double> u(0.0, total);
  const double draw = u(rng);
  double acc = 0.0;
  std::uint64_t last_nonzero = 0;
  for (std::uint64_t v = 0; v < weights.size(); ++v) {
    if (weights[v] <= 0.0) continue;
    last_nonzero = v;
    acc += weights[v];
    if (draw < acc) return v;
  }
  return last_nonzero;
}

std::uint64_t StateVector::measure(const Register& reg, Rng& rng) {
  const auto outcome = sample_index(distribution(reg), rng);
  project(controls_for_value(reg, outcome));
  return outcome;
}

double StateVector::project(std::span<const Control> condition) {
  const double p = probability(condition);
  if (p <= 0.0) throw Error("projection onto a zero-probability branch");
  ControlMask cm;
  for (const auto& c : condition) {
    cm.mask |= bit(c.qubit);
    if (c.state) cm.want |= bit(c.qubit);
  }
  const double inv = 1.0 / std::sqrt(p);
  for (Index i = 0; i < amps_.size(); ++i) {
    if (cm.ok(i)) {
      amps_[i] *= inv;
    } else {
      amps_[i] = 0.0;
    }
  }
  return p;
}

StateVector StateVector::reduce(std::span<const Control> condition) const {
  ControlMask cm;
  for (const auto& c : condition) {
    check_qubit(c.qubit, num_qubits_);
    cm.mask |= bit(c.qubit);
    if (c.state) cm.want |= bit(c.qubit);
  }
  std::vector<int> kept;
  for (int q = 0; q < num_qubits_; ++q) {
    if ((cm.mask & bit(q)) == 0) kept.push_back(q);
  }
  std::vector<amplitude> out(std::size_t{1} << kept.size(), amplitude{0.0, 0.0});
  for (Index r = 0; r < out.size(); ++r) {
    Index full = cm.want;
    for (std::size_t q = 0; q < kept.size(); ++q) {
      if ((r >> q) & 1U) full |= bit(kept[q]);
    }
    out[r] = amps_[full];
  }
  StateVector s(static_cast<int>(kept.size()), std::move(out));
  s.normalize();
  return s;
}

StateVector apply_gate(StateVector state, const Gate& g) {
  state.apply(g);
  return state;
}

double marginal_probability(const StateVector& state, int qubit, int outcome) {
  return state.probability(qubit, outcome);
}

std::pair<std::uint64_t, StateVector> measure_register(StateVector state, const Register& reg, Rng& rng) {
  const auto outcome = state.measure(reg, rng);
  return {outcome, std::move(state)};
}

StateVector quantum_comparator(StateVector state, const Register& reg, std::uint64_t bound, int flag_above,
                               int flag_zero) {
  state.apply(Gate{gates::Comparator{reg, bound, flag_above, flag_zero}, {}});
  return state;
}

}  // namespace qknn::qsim
