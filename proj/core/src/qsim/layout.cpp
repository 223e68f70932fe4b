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

#include "qknn/qsim/layout.hpp"

#include <algorithm>
#include <stdexcept>

#include "qknn/error.hpp"

namespace qknn::qsim {

int index_width(std::uint64_t count) {
  int w = 1;
  while (w < 63 && (std::uint64_t{1} << w) < count + 1) ++w;
  return w;
}

Layout::Layout(int qubit_cap) : cap_(qubit_cap) {
  if (qubit_cap < 1 || qubit_cap > 62) throw Error("qubit cap must lie in [1, 62]");
}

Register Layout::add(std::string name, int width) {
  if (width < 1) throw Error("register '" + name + "' must have width >= 1");
  if (contains(name)) throw Error("duplicate register name '" + name + "'");
  if (total_ + width > cap_) {
    throw CapacityError("register '" + name + "' needs " + std::to_string(total_ + width) +
                        " qubits, cap is " + std::to_string(cap_));
  }
  registers_.push_back(Register{std::move(name), total_, width});
  total_ += width;
  return registers_.back();
}

const Register& Layout::operator[](std::string_view name) const {
  auto it = std::find_if(registers_.begin(), registers_.end(),
                         [&](const Register& r) { return r.name == name; });
  if (it == registers_.end()) throw std::out_of_range("no register named '" + std::string(name) + "'");
  return *it;
}

bool Layout::contains(std::string_view name) const {
  return std::any_of(registers_.begin(), registers_.end(),
                     [&](const Register& r) { return r.name == name; });
}

}  // namespace qknn::qsim
