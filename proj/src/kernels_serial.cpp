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

namespace anchorspace::kernels {

double anchor_distance(Point2D p, const AnchorSpec &anchor) noexcept {
  if (const auto *pos = std::get_if<PositionedAnchor>(&anchor))
    return distance(p, pos->point);
  const auto &dir = std::get<DirectionalAnchor>(anchor);
  return dir.offset - dot(p, dir.direction);
}

bool linked(Point2D a, Point2D b, double comm_radius,
            std::span<const Obstacle> obstacles) noexcept {
  if (distance(a, b) > comm_radius)
    return false;
  return std::none_of(obstacles.begin(), obstacles.end(),
                      [&](const Obstacle &o) { return o.blocks(a, b); });
}

void bfs(const Adjacency &adjacency, NodeId source, std::vector<std::uint32_t> &out) {
  out.assign(adjacency.size(), kUnreachableHops);
  std::vector<NodeId> frontier;
  frontier.reserve(adjacency.size());
  out[source] = 0;
  frontier.push_back(source);
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const NodeId u = frontier[head];
    const std::uint32_t next = out[u] + 1;
    for (NodeId v : adjacency[u]) {
      if (out[v] == kUnreachableHops) {
        out[v] = next;
        frontier.push_back(v);
      }
    }
  }
}

namespace serial {

Adjacency build_adjacency(std::span<const Point2D> positions, double comm_radius,
                          std::span<const Obstacle> obstacles) {
  Adjacency adj(positions.size());
  for (std::size_t u = 0; u < positions.size(); ++u)
    for (std::size_t v = u + 1; v < positions.size(); ++v)
      if (linked(positions[u], positions[v], comm_radius, obstacles)) {
        adj[u].push_back(static_cast<NodeId>(v));
        adj[v].push_back(static_cast<NodeId>(u));
      }
  return adj;
}

HopMatrix all_pairs_hops(const Adjacency &adjacency) {
  const std::size_t n = adjacency.size();
  HopMatrix m{n, std::vector<std::uint32_t>(n * n)};
  std::vector<std::uint32_t> row;
  for (std::size_t s = 0; s < n; ++s) {
    bfs(adjacency, static_cast<NodeId>(s), row);
    std::copy(row.begin(), row.end(), m.hops.begin() + static_cast<std::ptrdiff_t>(s * n));
  }
  return m;
}

std::vector<std::vector<std::uint32_t>> multi_bfs(const Adjacency &adjacency,
                                                  std::span<const NodeId> sources) {
  std::vector<std::vector<std::uint32_t>> out(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i)
    bfs(adjacency, sources[i], out[i]);
  return out;
}

std::vector<std::vector<double>> exact_table(std::span<const Point2D> positions,
                                             std::span<const AnchorSpec> anchors) {
  std::vector<std::vector<double>> table(positions.size(),
                                         std::vector<double>(anchors.size()));
  for (std::size_t u = 0; u < positions.size(); ++u)
    for (std::size_t i = 0; i < anchors.size(); ++i)
      table[u][i] = anchor_distance(positions[u], anchors[i]);
  return table;
}

} // namespace serial
} // namespace anchorspace::kernels
