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

#include "qknn/knn/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qknn/error.hpp"

namespace qknn::knn {

double checked_component(double v) {
  constexpr double kSlack = 1e-12;
  if (!(v >= -kSlack && v <= 1.0 + kSlack)) {
    throw Error("feature component " + std::to_string(v) + " outside [0, 1]");
  }
  return std::min(1.0, std::max(0.0, v));
}

qsim::Circuit amplitude_loader(std::span<const double> values, const qsim::Register& reg) {
  if (values.empty()) throw Error("cannot load an empty vector");
  if (values.size() + 1 > reg.capacity()) {
    throw Error("vector of length " + std::to_string(values.size()) + " does not fit register '" +
                reg.name + "'");
  }
  const std::size_t cap = reg.capacity();
  std::vector<double> prefix(cap + 1, 0.0);  // prefix[x] = sum of squared values below x
  for (std::size_t x = 0; x < cap; ++x) {
    double w = 0.0;
    if (x >= 1 && x <= values.size()) {
      const double v = values[x - 1];
      if (v < 0.0 || !std::isfinite(v)) throw Error("amplitude loader needs nonnegative finite values");
      w = v * v;
    }
    prefix[x + 1] = prefix[x] + w;
  }
  if (prefix[cap] <= 0.0) throw Error("cannot load the zero vector");

  qsim::Circuit c;
  for (int level = reg.width - 1; level >= 0; --level) {
    const std::size_t half = std::size_t{1} << level;
    const std::size_t groups = cap >> (level + 1);
    for (std::size_t p = 0; p < groups; ++p) {
      const std::size_t lo = p * 2 * half;
      const double left = prefix[lo + half] - prefix[lo];
      const double right = prefix[lo + 2 * half] - prefix[lo + half];
      if (left + right <= 0.0 || right <= 0.0) continue;  // subtree empty or already |0>
      const double theta = 2.0 * std::atan2(std::sqrt(right), std::sqrt(left));
      std::vector<qsim::Control> ctrl;
      for (int b = level + 1; b < reg.width; ++b) ctrl.push_back({reg.qubit(b), ((p >> (b - level - 1)) & 1U) != 0});
      c.append(qsim::gates::Ry{reg.qubit(level), theta}, std::move(ctrl));
    }
  }
  return c;
}

qsim::StateVector amplitude_state(std::span<const double> values) {
  const qsim::Register reg{"v", 0, qsim::index_width(values.size())};
  qsim::StateVector s(reg.width);
  s.apply(amplitude_loader(values, reg));
  return s;
}

}  // namespace qknn::knn
