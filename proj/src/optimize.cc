// Copyright 2026 The entshare Authors
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

#include "entshare/optimize.h"

#include <algorithm>
#include <atomic>
#include <thread>

namespace entshare {

SearchResult coordinate_search(const Objective& f, std::vector<double> start,
                               const SearchOptions& options) {
  SearchResult result;
  result.x = std::move(start);
  const std::size_t n = result.x.size();
  result.value = f(result.x);
  result.evaluations = 1;

  auto budget_left = [&] { return result.evaluations < options.max_evaluations; };

  // One exploratory sweep around `base`; returns the improved point.
  auto explore = [&](std::vector<double> base, double base_value, double step,
                     double* out_value) {
    for (std::size_t i = 0; i < n && budget_left(); ++i) {
      const double original = base[i];
      base[i] = original + step;
      double v = f(base);
      ++result.evaluations;
      if (v > base_value) {
        base_value = v;
        continue;
      }
      if (!budget_left()) {
        base[i] = original;
        break;
      }
      base[i] = original - step;
      v = f(base);
      ++result.evaluations;
      if (v > base_value) {
        base_value = v;
        continue;
      }
      base[i] = original;
    }
    *out_value = base_value;
    return base;
  };

  double step = options.initial_step;
  while (step >= options.min_step && budget_left()) {
    double value = 0;
    std::vector<double> next = explore(result.x, result.value, step, &value);
    if (value <= result.value) {
      step /= 2;
      continue;
    }
    // Pattern moves: keep extrapolating along the successful direction.
    while (budget_left()) {
      std::vector<double> pattern(n);
      for (std::size_t i = 0; i < n; ++i) pattern[i] = 2 * next[i] - result.x[i];
      result.x = std::move(next);
      result.value = value;
      const double pattern_value = f(pattern);
      ++result.evaluations;
      double explored_value = 0;
      std::vector<double> explored = explore(pattern, pattern_value, step, &explored_value);
      if (explored_value > result.value) {
        next = std::move(explored);
        value = explored_value;
      } else {
        break;
      }
    }
  }
  return result;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 over (master, index).
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SearchResult multi_start_search(const Objective& f, const StartSampler& sampler,
                                const RestartOptions& options) {
  const int restarts = std::max(1, options.restarts);
  std::vector<SearchResult> results(restarts);
  SearchOptions per_restart = options.search;
  per_restart.max_evaluations = std::max(1, options.search.max_evaluations / restarts);
  parallel_for(restarts, options.workers, [&](int i) {
    std::mt19937_64 rng(derive_seed(options.seed, static_cast<std::uint64_t>(i)));
    results[i] = coordinate_search(f, sampler(i, rng), per_restart);
  });
  SearchResult best = results.front();
  int total = 0;
  for (const SearchResult& r : results) {
    total += r.evaluations;
    if (r.value > best.value) best = r;
  }
  best.evaluations = total;
  return best;
}

void parallel_for(int count, int workers, const std::function<void(int)>& body) {
  workers = std::clamp(workers, 1, std::max(1, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (int i = next++; i < count; i = next++) body(i);
    });
  }
  for (std::thread& t : threads) t.join();
}

}  // namespace entshare
