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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qknn/features/image.hpp"

namespace qknn::pipeline {

// Procedural stand-ins for the two image classes used throughout the tests
// and the demo: "airplanes" (pale fuselage against a blue sky) and "Leopards"
// (dark rosettes on a tan coat).
inline const std::vector<std::string> kSyntheticClasses{"airplanes", "Leopards"};

struct SyntheticOptions {
  std::size_t width = 64;
  std::size_t height = 48;
  double noise = 6.0;          // per-channel Gaussian sigma, 8-bit units
  double atypical_rate = 0.0;  // share of images drawn with the other class's background
};

features::RgbImage synthesize(const std::string& class_name, std::uint64_t seed, const SyntheticOptions& opts = {});

// Writes <root>/<class>/<class>_NNN.png for every synthetic class.
std::vector<std::filesystem::path> write_synthetic_dataset(const std::filesystem::path& root, std::size_t per_class,
                                                           std::uint64_t seed, const SyntheticOptions& opts = {});

}  // namespace qknn::pipeline
