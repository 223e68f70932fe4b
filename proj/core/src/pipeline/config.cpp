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

#include "qknn/pipeline/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "qknn/error.hpp"

namespace qknn::pipeline {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, std::size_t line) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw Error("config line " + std::to_string(line) + ": bad number '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

knn::QknnConfig parse_config(std::istream& is, knn::QknnConfig cfg) {
  bool saw_b = false;
  bool saw_t = false;
  std::string raw;
  for (std::size_t line = 1; std::getline(is, raw); ++line) {
    const auto text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw Error("config line " + std::to_string(line) + ": expected key=value");
    const auto key = trim(text.substr(0, eq));
    const auto value = trim(text.substr(eq + 1));
    if (key == "b") {
      cfg.distance_bits = parse_number<int>(value, line);
      saw_b = true;
    } else if (key == "t") {
      cfg.phase_qubits = parse_number<int>(value, line);
      saw_t = true;
    } else if (key == "c") {
      cfg.budget_multiplier = parse_number<double>(value, line);
    } else if (key == "qubit_cap") {
      cfg.qubit_cap = parse_number<int>(value, line);
    } else if (key == "ae_width") {
      cfg.ae_circuit_width_limit = parse_number<int>(value, line);
    } else {
      throw Error("config line " + std::to_string(line) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (saw_b && !saw_t) cfg.phase_qubits = cfg.distance_bits + 2;
  cfg.validate();
  return cfg;
}

knn::QknnConfig load_config(const std::filesystem::path& path, knn::QknnConfig base) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path.string());
  return parse_config(in, base);
}

void write_config(std::ostream& os, const knn::QknnConfig& cfg) {
  os << "b=" << cfg.distance_bits << "\nt=" << cfg.phase_qubits << "\nc=" << cfg.budget_multiplier
     << "\nqubit_cap=" << cfg.qubit_cap << "\nae_width=" << cfg.ae_circuit_width_limit << '\n';
}

}  // namespace qknn::pipeline
