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

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "anchorspace/geometry.hpp"

namespace anchorspace {

using NodeId = std::uint32_t;
using Adjacency = std::vector<std::vector<NodeId>>;

/// Anchor located at a point of the plane. `node` is set when the anchor is
/// itself a network node placed at exactly that point.
struct PositionedAnchor {
  Point2D point;
  std::optional<NodeId> node;

  friend bool operator==(const PositionedAnchor &, const PositionedAnchor &) = default;
};

/// Limit of an anchor receding to infinity along `direction`. Its distance
/// function is `offset - position . direction`.
struct DirectionalAnchor {
  Point2D direction{0.0, 1.0};
  double offset = 0.0;

  friend bool operator==(const DirectionalAnchor &, const DirectionalAnchor &) = default;
};

using AnchorSpec = std::variant<PositionedAnchor, DirectionalAnchor>;

inline bool is_directional(const AnchorSpec &a) noexcept {
  return std::holds_alternative<DirectionalAnchor>(a);
}

/// Immutable unit-disk network: node positions, obstacle-aware adjacency and
/// an anchor set. Copies are cheap enough for the desk-scale sizes used here;
/// anchor placement returns a modified copy.
class Topology {
public:
  /// Builds adjacency from explicit positions. Throws ArgumentError when a
  /// node lies inside an obstacle or a parameter is out of range.
  static Topology from_positions(std::vector<Point2D> positions, double side,
                                 double comm_radius,
                                 std::vector<Obstacle> obstacles = {});

  std::size_t size() const noexcept { return positions_.size(); }
  double side() const noexcept { return side_; }
  double comm_radius() const noexcept { return comm_radius_; }

  Point2D position(NodeId id) const { return positions_.at(id); }
  std::span<const Point2D> positions() const noexcept { return positions_; }

  /// Neighbors in ascending id order.
  std::span<const NodeId> neighbors(NodeId id) const { return adjacency_.at(id); }
  const Adjacency &adjacency() const noexcept { return adjacency_; }
  bool adjacent(NodeId u, NodeId v) const;
  std::size_t edge_count() const noexcept;
  double mean_degree() const noexcept;

  std::span<const Obstacle> obstacles() const noexcept { return obstacles_; }
  std::span<const AnchorSpec> anchors() const noexcept { return anchors_; }

  /// Copy with the anchor list replaced. Validates positioned node ids.
  Topology with_anchors(std::vector<AnchorSpec> anchors) const;

  bool valid(NodeId id) const noexcept { return id < positions_.size(); }

  friend bool operator==(const Topology &, const Topology &) = default;

private:
  Topology() = default;

  std::vector<Point2D> positions_;
  double side_ = 1.0;
  double comm_radius_ = 1.0;
  Adjacency adjacency_;
  std::vector<Obstacle> obstacles_;
  std::vector<AnchorSpec> anchors_;
};

/// `count` nodes uniformly in [0, side]^2, resampled while inside an obstacle.
/// Throws GenerationError after 10,000 consecutive rejections for one node.
Topology generate_uniform(std::size_t count, double side, double comm_radius,
                          std::vector<Obstacle> obstacles, std::uint64_t seed);

/// k beacons at equal perimeter spacing, counterclockwise from (0, 0).
Topology place_boundary_anchors(const Topology &topology, std::size_t k);

/// k distinct nodes drawn uniformly without replacement become anchors.
Topology place_random_anchors(const Topology &topology, std::size_t k,
                              std::uint64_t seed);

/// External emitters at arbitrary points, order preserved.
Topology place_external_anchors(const Topology &topology,
                                std::span<const Point2D> points);

/// The two directional anchors "at infinite north/east": east (1, 0) first,
/// then north (0, 1), both with the same offset.
Topology place_infinite_ne_anchors(const Topology &topology, double offset = 0.0);

inline constexpr std::uint32_t kUnreachableHops = 0xffffffffu;

/// BFS hop distances from `source` to every node; kUnreachableHops where
/// there is no path.
std::vector<std::uint32_t> hop_distances(const Topology &topology, NodeId source);

/// Minimum edge count between two nodes, nullopt when disconnected.
std::optional<std::uint32_t> shortest_path_hops(const Topology &topology,
                                                NodeId source, NodeId target);

/// Node nearest to `p`, lowest id on ties.
NodeId nearest_node(const Topology &topology, Point2D p);

} // namespace anchorspace
