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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qknn/knn/distance.hpp"
#include "qknn/knn/sigma.hpp"
#include "qknn/qsim/state_vector.hpp"

namespace qknn::knn {

// floor(c * ceil(sqrt(k * M))) Grover iterations.
std::uint64_t search_budget(std::size_t k, std::size_t M, double c);

struct SearchBudget {
  std::uint64_t limit = 0;
  std::uint64_t used = 0;

  std::uint64_t remaining() const { return used >= limit ? 0 : limit - used; }
};

struct SearchCounters {
  std::uint64_t grover_iterations = 0;  // oracle + diffusion pairs applied
  std::uint64_t oracle_calls = 0;       // phase-oracle applications
  std::uint64_t measurements = 0;       // index-register readouts
};

// Searches the index register of `sigma` for some j not in `exclude` whose
// distance code is strictly below `threshold`. Runs rounds of a randomized,
// geometrically growing number of Grover iterations (the schedule for an
// unknown number of marked items), each followed by one measurement, and
// charges every iteration to `budget`. Returns std::nullopt once the budget
// is spent without a hit.
std::optional<std::size_t> grover_threshold_search(const Sigma& sigma, std::uint64_t threshold,
                                                   std::span<const std::size_t> exclude,
                                                   SearchBudget& budget, SearchCounters& counters,
                                                   qsim::Rng& rng);

struct TraceStep {
  std::size_t replaced = 0;
  std::size_t inserted = 0;
  std::uint64_t replaced_code = 0;
  std::uint64_t inserted_code = 0;
  std::uint64_t iterations_used = 0;
};

struct SearchResult {
  std::vector<std::size_t> indexes;  // 1-based, ascending by (code, index)
  std::vector<std::size_t> initial;  // the random starting candidates
  std::uint64_t grover_iterations = 0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t measurements = 0;
  std::uint64_t budget = 0;
  bool success = false;  // codes of `indexes` are the k smallest codes
  std::vector<TraceStep> trace;
};

// k-minimum search: start from k distinct random indexes, repeatedly replace
// the candidate with the largest distance by a strictly closer index found
// with grover_threshold_search, and stop when c * ceil(sqrt(kM)) Grover
// iterations are used up.
SearchResult durr_k_min(const Sigma& sigma, std::size_t k, double c, qsim::Rng& rng);
SearchResult durr_k_min(const DistanceTable& table, std::size_t k, double c, qsim::Rng& rng);

void write_trace(std::ostream& os, const SearchResult& result);

}  // namespace qknn::knn
