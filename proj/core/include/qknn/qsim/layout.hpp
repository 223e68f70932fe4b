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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qknn::qsim {

inline constexpr int kDefaultQubitCap = 26;

// A contiguous run of qubits interpreted as a little-endian unsigned integer:
// bit q of the register value lives on qubit offset + q.
struct Register {
  std::string name;
  int offset = 0;
  int width = 0;

  std::uint64_t capacity() const { return std::uint64_t{1} << width; }
  std::uint64_t mask() const { return (capacity() - 1) << offset; }
  int qubit(int bit) const { return offset + bit; }
  std::uint64_t value_of(std::uint64_t basis_index) const {
    return (basis_index >> offset) & (capacity() - 1);
  }
};

// Smallest width w with 2^w >= count + 1, i.e. room for the values 0..count.
int index_width(std::uint64_t count);

// Named registers packed from qubit 0 upwards.
class Layout {
 public:
  explicit Layout(int qubit_cap = kDefaultQubitCap);

  // Appends a register; throws on duplicate names, width < 1, or when the
  // layout would exceed the qubit cap.
  Register add(std::string name, int width);

  const Register& operator[](std::string_view name) const;
  bool contains(std::string_view name) const;

  int total_qubits() const { return total_; }
  int cap() const { return cap_; }
  std::span<const Register> registers() const { return registers_; }

 private:
  int cap_;
  int total_ = 0;
  std::vector<Register> registers_;
};

}  // namespace qknn::qsim
