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
#include <iosfwd>
#include <span>
#include <vector>

#include "qknn/knn/encoding.hpp"

namespace qknn::knn {

inline constexpr int kMaxDistanceBits = 52;

// d(a, b) = 1/2 - 1/2 <a, b>^2 for unit vectors; lies in [0, 1/2].
double swap_distance(std::span<const double> a, std::span<const double> b);

// round(d * (2^bits - 1)), bits in 1..52.
std::uint64_t quantize_distance(double d, int bits);

struct DistanceTable {
  std::vector<double> exact;             // exact[j-1] = d(v0, v_j)
  std::vector<std::uint64_t> quantized;  // b-bit codes of `exact`
  int bits = 8;

  std::size_t size() const { return exact.size(); }
};

DistanceTable distance_table(std::span<const double> test_vector, std::span<const Vector> training,
                             int bits = 8);

// CSV dump: index,exact,quantized with 1-based indexes.
void write_distance_csv(std::ostream& os, const DistanceTable& table);

}  // namespace qknn::knn
