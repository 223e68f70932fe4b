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

#include "qknn/knn/search.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "qknn/error.hpp"

namespace qknn::knn {

namespace {

constexpr double kScheduleGrowth = 6.0 / 5.0;

std::uint64_t ceil_sqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while (r * r < x) ++r;
  return r;
}

bool contains(std::span<const std::size_t> xs, std::size_t v) { return std::find(xs.begin(), xs.end(), v) != xs.end(); }

}  // namespace

std::uint64_t search_budget(std::size_t k, std::size_t M, double c) {
  if (!(c > 0.0)) throw Error("budget multiplier must be positive");
  const double base = static_cast<double>(ceil_sqrt(static_cast<std::uint64_t>(k) * M));
  return static_cast<std::uint64_t>(std::floor(c * base + 1e-9));
}

std::optional<std::size_t> grover_threshold_search(const Sigma& sigma, std::uint64_t threshold,
                                                   std::span<const std::size_t> exclude, SearchBudget& budget,
                                                   SearchCounters& counters, qsim::Rng& rng) {
  const std::size_t M = sigma.count;
  if (threshold > (std::uint64_t{1} << sigma.distance_bits)) {
    throw Error("threshold outside the distance register range");
  }
  const qsim::Register index{"j", 0, sigma.index_qubits};
  auto marked = [&](std::uint64_t j) {
    return j >= 1 && j <= M && !contains(exclude, static_cast<std::size_t>(j)) && sigma.codes[j - 1] < threshold;
  };
  // The distance register is a fixed function of j, so load -> compare ->
  // unload collapses to a phase flip on the index register.
  const qsim::Gate oracle{qsim::gates::PhaseOracle{index, marked, "d_j<threshold"}, {}};
  const qsim::Gate diffusion{qsim::gates::Diffusion{index, 1, M}, {}};

  qsim::StateVector start(sigma.index_qubits);
  start[0] = 0.0;
  const double a = 1.0 / std::sqrt(static_cast<double>(M));
  for (std::size_t j = 1; j <= M; ++j) start[j] = a;

  const double schedule_cap = std::sqrt(static_cast<double>(M));
  const std::uint64_t max_rounds = 64 + 16 * budget.limit;
  double schedule = 1.0;
  for (std::uint64_t round = 0; round < max_rounds && budget.remaining() > 0; ++round) {
    const auto top = static_cast<std::uint64_t>(std::ceil(schedule)) - 1;
    std::uniform_int_distribution<std::uint64_t> pick(0, top);
    const std::uint64_t iterations = std::min(pick(rng), budget.remaining());

    auto s = start;
    for (std::uint64_t it = 0; it < iterations; ++it) {
      s.apply(oracle);
      s.apply(diffusion);
    }
    budget.used += iterations;
    counters.grover_iterations += iterations;
    counters.oracle_calls += iterations;

    const auto j = s.measure(index, rng);
    ++counters.measurements;
    if (marked(j)) return static_cast<std::size_t>(j);
    schedule = std::min(kScheduleGrowth * schedule, schedule_cap);
  }
  return std::nullopt;
}

SearchResult durr_k_min(const Sigma& sigma, std::size_t k, double c, qsim::Rng& rng) {
  const std::size_t M = sigma.count;
  if (k < 1 || k > M) throw Error("k must lie in [1, M] (k=" + std::to_string(k) + ", M=" + std::to_string(M) + ")");
  const auto code = [&](std::size_t j) { return sigma.codes[j - 1]; };

  SearchResult result;
  SearchBudget budget{search_budget(k, M, c), 0};
  SearchCounters counters;
  result.budget = budget.limit;

  std::vector<std::size_t> pool(M);
  for (std::size_t j = 0; j < M; ++j) pool[j] = j + 1;
  for (std::size_t x = 0; x < k; ++x) {
    std::uniform_int_distribution<std::size_t> pick(x, M - 1);
    std::swap(pool[x], pool[pick(rng)]);
  }
  std::vector<std::size_t> candidates(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  result.initial = candidates;

  while (budget.remaining() > 0) {
    const auto worst = std::max_element(candidates.begin(), candidates.end(),
                                        [&](std::size_t a, std::size_t b) { return code(a) < code(b); });
    const auto found = grover_threshold_search(sigma, code(*worst), candidates, budget, counters, rng);
    if (!found) break;
    result.trace.push_back({*worst, *found, code(*worst), code(*found), budget.used});
    *worst = *found;
  }

  std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
    return code(a) != code(b) ? code(a) < code(b) : a < b;
  });
  std::vector<std::uint64_t> all = sigma.codes;
  std::sort(all.begin(), all.end());
  result.success = true;
  for (std::size_t x = 0; x < k; ++x) result.success = result.success && code(candidates[x]) == all[x];

  result.indexes = std::move(candidates);
  result.grover_iterations = counters.grover_iterations;
  result.oracle_calls = counters.oracle_calls;
  result.measurements = counters.measurements;
  return result;
}

SearchResult durr_k_min(const DistanceTable& table, std::size_t k, double c, qsim::Rng& rng) {
  return durr_k_min(sigma_from_table(table), k, c, rng);
}

void write_trace(std::ostream& os, const SearchResult& result) {
  os << "budget " << result.budget << '\n';
  os << "initial";
  for (auto j : result.initial) os << ' ' << j;
  os << '\n';
  for (const auto& s : result.trace) {
    os << "replace " << s.replaced << " (code " << s.replaced_code << ") with " << s.inserted << " (code "
       << s.inserted_code << ") after " << s.iterations_used << " iterations\n";
  }
  os << "final";
  for (auto j : result.indexes) os << ' ' << j;
  os << "\niterations " << result.grover_iterations << " oracle_calls " << result.oracle_calls << " measurements "
     << result.measurements << '\n';
}

}  // namespace qknn::knn
