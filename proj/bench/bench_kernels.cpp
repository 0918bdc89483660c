// Copyright 2026 The AnchorSpace Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels. Usage: bench_kernels [nodes] [repeats]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "anchorspace/harness.hpp"
#include "anchorspace/kernels.hpp"
#include "anchorspace/topology.hpp"

using namespace anchorspace;

namespace {

double best_of(int repeats, const std::function<void()> &fn) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best,
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void row(const char *name, int repeats, const std::function<void()> &serial,
         const std::function<void()> &parallel) {
  const double s = best_of(repeats, serial);
  const double p = best_of(repeats, parallel);
  std::printf("%-18s %10.3f %10.3f %8.2fx\n", name, s * 1e3, p * 1e3, s / p);
}

} // namespace

int main(int argc, char **argv) {
  const std::size_t nodes = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  const double radius = 0.08 * std::sqrt(500.0 / static_cast<double>(nodes));

  const std::vector<Obstacle> obstacles{{{0.5, 0.5}, 0.1}};
  const auto t = place_boundary_anchors(generate_uniform(nodes, 1.0, radius, obstacles, 1), 10);
  const auto &pos = t.positions();
  std::vector<NodeId> sources;
  for (NodeId i = 0; i < 64; ++i)
    sources.push_back(static_cast<NodeId>(i * nodes / 64));

  std::printf("nodes %zu, radius %.4f, threads %d\n", nodes, radius, omp_get_max_threads());
  std::printf("%-18s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");
  row("build_adjacency", repeats,
      [&] { kernels::serial::build_adjacency(pos, radius, obstacles); },
      [&] { kernels::omp::build_adjacency(pos, radius, obstacles); });
  row("all_pairs_hops", repeats, [&] { kernels::serial::all_pairs_hops(t.adjacency()); },
      [&] { kernels::omp::all_pairs_hops(t.adjacency()); });
  row("multi_bfs", repeats, [&] { kernels::serial::multi_bfs(t.adjacency(), sources); },
      [&] { kernels::omp::multi_bfs(t.adjacency(), sources); });
  row("exact_table", repeats, [&] { kernels::serial::exact_table(pos, t.anchors()); },
      [&] { kernels::omp::exact_table(pos, t.anchors()); });

  const auto sys = build_system(t, DistanceMode::Exact, Norm::L2, Execution::Serial);
  const auto pairs = sample_pairs(all_pairs_hops(t), 2000, 1);
  const RoutingPolicy policy{Inertia{0.5}, MultiDim{}, 1000};
  row("route_batch", repeats, [&] { route_batch(t, &sys, policy, pairs, Execution::Serial); },
      [&] { route_batch(t, &sys, policy, pairs, Execution::Parallel); });

  std::vector<ScenarioConfig> grid;
  for (std::size_t k = 4; k <= 10; ++k) {
    ScenarioConfig c;
    c.name = "bench";
    c.anchors = BoundaryPlacement{k};
    c.replications = 2;
    c.policies = {{std::nullopt, {Greedy{}, MultiDim{}, 1}}};
    grid.push_back(c);
  }
  row("run_grid", repeats, [&] { run_grid(grid, {false, Execution::Serial}); },
      [&] { run_grid(grid, {false, Execution::Parallel}); });
  return 0;
}
