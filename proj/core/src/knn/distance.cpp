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

#include "qknn/knn/distance.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>

#include "qknn/error.hpp"

namespace qknn::knn {

double swap_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error("distance between vectors of different dimension");
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return 0.5 - 0.5 * std::min(1.0, dot * dot);
}

std::uint64_t quantize_distance(double d, int bits) {
  if (bits < 1 || bits > kMaxDistanceBits) throw Error("distance register width must lie in [1, 52]");
  const double top = static_cast<double>((std::uint64_t{1} << bits) - 1);
  const double clamped = std::min(1.0, std::max(0.0, d));
  return static_cast<std::uint64_t>(std::llround(clamped * top));
}

DistanceTable distance_table(std::span<const double> test_vector, std::span<const Vector> training, int bits) {
  DistanceTable t;
  t.bits = bits;
  t.exact.reserve(training.size());
  t.quantized.reserve(training.size());
  for (const auto& v : training) {
    const double d = swap_distance(test_vector, v);
    t.exact.push_back(d);
    t.quantized.push_back(quantize_distance(d, bits));
  }
  return t;
}

void write_distance_csv(std::ostream& os, const DistanceTable& table) {
  os << "index,exact,quantized\n";
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t j = 0; j < table.size(); ++j) {
    os << j + 1 << ',' << table.exact[j] << ',' << table.quantized[j] << '\n';
  }
}

}  // namespace qknn::knn
