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

#pragma once

// Data-parallel kernels behind the topology and coordinate modules. Each
// kernel exists twice: a straightforward serial reference and an OpenMP
// version. Both must produce identical results; the test suite and the
// benchmark target compare them.

#include <cstdint>
#include <span>
#include <vector>

#include "anchorspace/geometry.hpp"
#include "anchorspace/topology.hpp"

namespace anchorspace {

enum class Execution { Serial, Parallel };

/// Row-major n x n hop matrix.
struct HopMatrix {
  std::size_t n = 0;
  std::vector<std::uint32_t> hops;

  std::uint32_t at(NodeId u, NodeId v) const { return hops[std::size_t{u} * n + v]; }

  friend bool operator==(const HopMatrix &, const HopMatrix &) = default;
};

namespace kernels {

/// BFS over an adjacency list; writes hop distances into `out` (resized).
void bfs(const Adjacency &adjacency, NodeId source, std::vector<std::uint32_t> &out);

namespace serial {
Adjacency build_adjacency(std::span<const Point2D> positions, double comm_radius,
                          std::span<const Obstacle> obstacles);
HopMatrix all_pairs_hops(const Adjacency &adjacency);
std::vector<std::vector<std::uint32_t>> multi_bfs(const Adjacency &adjacency,
                                                  std::span<const NodeId> sources);
std::vector<std::vector<double>> exact_table(std::span<const Point2D> positions,
                                             std::span<const AnchorSpec> anchors);
} // namespace serial

namespace omp {
Adjacency build_adjacency(std::span<const Point2D> positions, double comm_radius,
                          std::span<const Obstacle> obstacles);
HopMatrix all_pairs_hops(const Adjacency &adjacency);
std::vector<std::vector<std::uint32_t>> multi_bfs(const Adjacency &adjacency,
                                                  std::span<const NodeId> sources);
std::vector<std::vector<double>> exact_table(std::span<const Point2D> positions,
                                             std::span<const AnchorSpec> anchors);
} // namespace omp

/// Component i of the exact virtual coordinate at `p`.
double anchor_distance(Point2D p, const AnchorSpec &anchor) noexcept;

/// Whether the segment a-b is a radio link under the unit-disk + obstacle model.
bool linked(Point2D a, Point2D b, double comm_radius,
            std::span<const Obstacle> obstacles) noexcept;

} // namespace kernels

HopMatrix all_pairs_hops(const Topology &topology,
                         Execution exec = Execution::Parallel);

/// Largest finite hop distance (0 for a single node).
std::uint32_t hop_diameter(const HopMatrix &matrix) noexcept;

} // namespace anchorspace
