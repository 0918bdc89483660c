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

#include "anchorspace/kernels.hpp"

#include <algorithm>

namespace anchorspace::kernels::omp {

// Every parallel loop writes disjoint rows, so the output does not depend on
// the schedule. Signed loop counters keep older OpenMP runtimes happy.

Adjacency build_adjacency(std::span<const Point2D> positions, double comm_radius,
                          std::span<const Obstacle> obstacles) {
  const auto n = static_cast<std::ptrdiff_t>(positions.size());
  Adjacency adj(positions.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t u = 0; u < n; ++u) {
    auto &row = adj[static_cast<std::size_t>(u)];
    for (std::ptrdiff_t v = 0; v < n; ++v)
      if (v != u && linked(positions[static_cast<std::size_t>(u)],
                           positions[static_cast<std::size_t>(v)], comm_radius,
                           obstacles))
        row.push_back(static_cast<NodeId>(v));
  }
  return adj;
}

HopMatrix all_pairs_hops(const Adjacency &adjacency) {
  const std::size_t n = adjacency.size();
  HopMatrix m{n, std::vector<std::uint32_t>(n * n)};
#pragma omp parallel
  {
    std::vector<std::uint32_t> row;
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(n); ++s) {
      bfs(adjacency, static_cast<NodeId>(s), row);
      std::copy(row.begin(), row.end(), m.hops.begin() + s * static_cast<std::ptrdiff_t>(n));
    }
  }
  return m;
}

std::vector<std::vector<std::uint32_t>> multi_bfs(const Adjacency &adjacency,
                                                  std::span<const NodeId> sources) {
  std::vector<std::vector<std::uint32_t>> out(sources.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(sources.size()); ++i)
    bfs(adjacency, sources[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<std::vector<double>> exact_table(std::span<const Point2D> positions,
                                             std::span<const AnchorSpec> anchors) {
  std::vector<std::vector<double>> table(positions.size(),
                                         std::vector<double>(anchors.size()));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t u = 0; u < static_cast<std::ptrdiff_t>(positions.size()); ++u)
    for (std::size_t i = 0; i < anchors.size(); ++i)
      table[static_cast<std::size_t>(u)][i] =
          anchor_distance(positions[static_cast<std::size_t>(u)], anchors[i]);
  return table;
}

} // namespace anchorspace::kernels::omp
