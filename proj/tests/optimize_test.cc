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

#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <set>

namespace entshare {
namespace {

TEST(optimize, coordinate_search_finds_quadratic_maximum) {
  const Objective f = [](std::span<const double> x) {
    return -(x[0] - 1.5) * (x[0] - 1.5) - 2 * (x[1] + 0.25) * (x[1] + 0.25) - x[0] * x[1] / 4;
  };
  SearchOptions options;
  options.min_step = 1e-10;
  options.max_evaluations = 100000;
  const SearchResult r = coordinate_search(f, {0, 0}, options);
  // Stationary point: 2 x0 + x1 / 4 = 3 and x0 / 4 + 4 x1 = -1.
  const double det = 2 * 4 - 0.25 * 0.25;
  const double x0 = (3 * 4 - 0.25 * (-1)) / det;
  const double x1 = (2 * (-1) - 0.25 * 3) / det;
  EXPECT_NEAR(r.x[0], x0, 1e-7);
  EXPECT_NEAR(r.x[1], x1, 1e-7);
  EXPECT_LE(r.evaluations, options.max_evaluations);
}

TEST(optimize, coordinate_search_respects_budget) {
  int calls = 0;
  const Objective f = [&calls](std::span<const double> x) {
    ++calls;
    return std::sin(x[0]) + std::cos(3 * x[1]);
  };
  SearchOptions options;
  options.max_evaluations = 37;
  const SearchResult r = coordinate_search(f, {0.1, 0.2}, options);
  EXPECT_LE(calls, 37);
  EXPECT_EQ(r.evaluations, calls);
}

TEST(optimize, multi_start_escapes_local_maximum) {
  // Two bumps; the taller one is away from the first start.
  const Objective f = [](std::span<const double> x) {
    return std::exp(-(x[0] + 2) * (x[0] + 2)) + 2 * std::exp(-(x[0] - 3) * (x[0] - 3));
  };
  const StartSampler sampler = [](int index, std::mt19937_64& rng) {
    if (index == 0) return std::vector<double>{-2};
    std::uniform_real_distribution<double> u(-5, 5);
    return std::vector<double>{u(rng)};
  };
  RestartOptions options;
  options.restarts = 8;
  options.search.max_evaluations = 8000;
  const SearchResult r = multi_start_search(f, sampler, options);
  EXPECT_NEAR(r.x[0], 3, 1e-5);
  EXPECT_NEAR(r.value, 2, 1e-9);
}

TEST(optimize, multi_start_is_independent_of_worker_count) {
  const Objective f = [](std::span<const double> x) {
    return std::sin(3 * x[0]) * std::cos(2 * x[1]) - 0.01 * (x[0] * x[0] + x[1] * x[1]);
  };
  const StartSampler sampler = [](int, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-4, 4);
    const double a = u(rng);
    const double b = u(rng);
    return std::vector<double>{a, b};
  };
  RestartOptions options;
  options.restarts = 12;
  options.seed = 99;
  const SearchResult serial = multi_start_search(f, sampler, options);
  options.workers = 5;
  const SearchResult parallel = multi_start_search(f, sampler, options);
  EXPECT_EQ(serial.x, parallel.x);
  EXPECT_EQ(serial.value, parallel.value);
}

TEST(optimize, derive_seed_spreads) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(42, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(derive_seed(42, 7), derive_seed(42, 7));
  EXPECT_NE(derive_seed(42, 7), derive_seed(43, 7));
}

TEST(optimize, parallel_for_visits_each_index_once) {
  for (const int workers : {1, 3, 16}) {
    std::vector<std::atomic<int>> hits(100);
    parallel_for(100, workers, [&](int i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
}

}  // namespace
}  // namespace entshare
