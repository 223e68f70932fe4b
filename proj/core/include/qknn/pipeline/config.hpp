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

#include <filesystem>
#include <iosfwd>

#include "qknn/knn/sigma.hpp"

namespace qknn::pipeline {

// Flat key=value text. Keys: b, t, c, qubit_cap, ae_width. Blank lines and
// lines starting with '#' are skipped. When b is given without t, t = b + 2.
knn::QknnConfig parse_config(std::istream& is, knn::QknnConfig base = {});
knn::QknnConfig load_config(const std::filesystem::path& path, knn::QknnConfig base = {});

void write_config(std::ostream& os, const knn::QknnConfig& cfg);

}  // namespace qknn::pipeline
