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

#include "qknn/qsim/gate.hpp"

#include <sstream>

namespace qknn::qsim {

std::vector<Control> controls_for_value(const Register& reg, std::uint64_t value) {
  std::vector<Control> out;
  out.reserve(static_cast<std::size_t>(reg.width));
  for (int q = 0; q < reg.width; ++q) out.push_back({reg.qubit(q), ((value >> q) & 1U) != 0});
  return out;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<int> register_qubits(const Register& r) {
  std::vector<int> q;
  for (int b = 0; b < r.width; ++b) q.push_back(r.qubit(b));
  return q;
}

}  // namespace

Gate inverse_of(const Gate& g) {
  Gate out = g;
  std::visit(overloaded{
                 [](gates::Ry& r) { r.theta = -r.theta; },
                 [](gates::Phase& p) { p.phi = -p.phi; },
                 [](gates::GlobalPhase& p) { p.phi = -p.phi; },
                 [](gates::Unitary& u) {
                   u.matrix = u.matrix.adjoint().eval();
                   u.label += "^dag";
                 },
                 // H, X, Swap, Comparator, Diffusion and PhaseOracle are involutions.
                 [](auto&) {},
             },
             out.op);
  return out;
}

std::vector<int> target_qubits(const Gate& g) {
  return std::visit(overloaded{
                        [](const gates::H& h) { return std::vector<int>{h.target}; },
                        [](const gates::X& x) { return std::vector<int>{x.target}; },
                        [](const gates::Ry& r) { return std::vector<int>{r.target}; },
                        [](const gates::Phase& p) { return std::vector<int>{p.target}; },
                        [](const gates::GlobalPhase&) { return std::vector<int>{}; },
                        [](const gates::Swap& s) { return std::vector<int>{s.a, s.b}; },
                        [](const gates::Comparator& c) {
                          auto q = register_qubits(c.reg);
                          q.push_back(c.flag_above);
                          q.push_back(c.flag_zero);
                          return q;
                        },
                        [](const gates::Diffusion& d) { return register_qubits(d.reg); },
                        [](const gates::PhaseOracle& o) { return register_qubits(o.reg); },
                        [](const gates::Unitary& u) { return u.targets; },
                    },
                    g.op);
}

std::string describe(const Gate& g) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const gates::H& h) { os << "H q" << h.target; },
                 [&](const gates::X& x) { os << "X q" << x.target; },
                 [&](const gates::Ry& r) { os << "RY(" << r.theta << ") q" << r.target; },
                 [&](const gates::Phase& p) { os << "P(" << p.phi << ") q" << p.target; },
                 [&](const gates::GlobalPhase& p) { os << "GPHASE(" << p.phi << ")"; },
                 [&](const gates::Swap& s) { os << "SWAP q" << s.a << " q" << s.b; },
                 [&](const gates::Comparator& c) {
                   os << "CMP " << c.reg.name << " bound=" << c.bound << " above=q" << c.flag_above
                      << " zero=q" << c.flag_zero;
                 },
                 [&](const gates::Diffusion& d) {
                   os << "DIFFUSION " << d.reg.name << " [" << d.lo << "," << d.hi << "]";
                 },
                 [&](const gates::PhaseOracle& o) { os << "ORACLE(" << o.label << ") " << o.reg.name; },
                 [&](const gates::Unitary& u) {
                   os << "UNITARY(" << u.label << ")";
                   for (int t : u.targets) os << " q" << t;
                 },
             },
             g.op);
  if (!g.controls.empty()) {
    os << " ctrl";
    for (const auto& c : g.controls) os << ' ' << (c.state ? "" : "!") << 'q' << c.qubit;
  }
  return os.str();
}

}  // namespace qknn::qsim
