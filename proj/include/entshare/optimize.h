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

#ifndef ENTSHARE_OPTIMIZE_H_
#define ENTSHARE_OPTIMIZE_H_

// Derivative-free maximization shared by the channel-negativity search, the
// F* program and the filter oracle: coordinate (pattern) search with step
// halving, restarted from seeded random points.

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace entshare {

using Objective = std::function<double(std::span<const double>)>;

struct SearchOptions {
  double initial_step = 0.5;
  double min_step = 1e-7;
  int max_evaluations = 5000;
};

struct SearchResult {
  std::vector<double> x;
  double value = 0;
  int evaluations = 0;
};

/// Hooke-Jeeves style search: probe +/- step along every coordinate, follow
/// successful moves with a pattern step, halve the step when a full sweep
/// makes no progress. Stops at `min_step` or when the evaluation budget is
/// spent.
SearchResult coordinate_search(const Objective& f, std::vector<double> start,
                               const SearchOptions& options);

/// Produces a starting point for restart `index` from its own generator.
using StartSampler = std::function<std::vector<double>(int index, std::mt19937_64& rng)>;

struct RestartOptions {
  int restarts = 16;
  std::uint64_t seed = 0x5eed;
  int workers = 1;
  SearchOptions search;
};

/// Runs `restarts` independent searches and keeps the best. Restart i draws
/// from a generator seeded by derive_seed(seed, i), so the result does not
/// depend on `workers`. Ties go to the lowest restart index.
SearchResult multi_start_search(const Objective& f, const StartSampler& sampler,
                                const RestartOptions& options);

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Calls body(i) for i in [0, count) on up to `workers` threads.
void parallel_for(int count, int workers, const std::function<void(int)>& body);

}  // namespace entshare

#endif  // ENTSHARE_OPTIMIZE_H_
