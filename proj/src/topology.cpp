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

#include "anchorspace/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "anchorspace/error.hpp"
#include "anchorspace/kernels.hpp"
#include "anchorspace/rng.hpp"

namespace anchorspace {

namespace {

constexpr int kMaxConsecutiveRejections = 10'000;

bool finite(Point2D p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void check_anchor(const Topology &t, const AnchorSpec &a) {
  if (const auto *pos = std::get_if<PositionedAnchor>(&a)) {
    if (!finite(pos->point))
      throw ArgumentError("anchor position must be finite");
    if (pos->node) {
      if (!t.valid(*pos->node))
        throw ArgumentError("anchor host node " + std::to_string(*pos->node) +
                            " out of range");
      if (!(t.position(*pos->node) == pos->point))
        throw ArgumentError("anchor host node " + std::to_string(*pos->node) +
                            " is not at the anchor position");
    }
    return;
  }
  const auto &dir = std::get<DirectionalAnchor>(a);
  if (std::abs(std::hypot(dir.direction.x, dir.direction.y) - 1.0) > 1e-9)
    throw ArgumentError("directional anchor direction must have unit norm");
  if (!std::isfinite(dir.offset))
    throw ArgumentError("directional anchor offset must be finite");
}

} // namespace

Topology Topology::from_positions(std::vector<Point2D> positions, double side,
                                  double comm_radius, std::vector<Obstacle> obstacles) {
  if (!(side > 0.0) || !std::isfinite(side))
    throw ArgumentError("side must be positive");
  if (!(comm_radius > 0.0) || !std::isfinite(comm_radius))
    throw ArgumentError("communication radius must be positive");
  for (const auto &o : obstacles)
    if (!(o.radius > 0.0) || !finite(o.center))
      throw ArgumentError("obstacle radius must be strictly positive");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (!finite(positions[i]))
      throw ArgumentError("node " + std::to_string(i) + " has a non-finite position");
    for (const auto &o : obstacles)
      if (o.contains(positions[i]))
        throw ArgumentError("node " + std::to_string(i) + " lies inside an obstacle");
  }

  Topology t;
  t.adjacency_ = kernels::omp::build_adjacency(positions, comm_radius, obstacles);
  t.positions_ = std::move(positions);
  t.side_ = side;
  t.comm_radius_ = comm_radius;
  t.obstacles_ = std::move(obstacles);
  return t;
}

bool Topology::adjacent(NodeId u, NodeId v) const {
  const auto &row = adjacency_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::size_t Topology::edge_count() const noexcept {
  std::size_t deg = 0;
  for (const auto &row : adjacency_)
    deg += row.size();
  return deg / 2;
}

double Topology::mean_degree() const noexcept {
  if (positions_.empty())
    return 0.0;
  return 2.0 * static_cast<double>(edge_count()) / static_cast<double>(positions_.size());
}

Topology Topology::with_anchors(std::vector<AnchorSpec> anchors) const {
  for (const auto &a : anchors)
    check_anchor(*this, a);
  Topology t = *this;
  t.anchors_ = std::move(anchors);
  return t;
}

Topology generate_uniform(std::size_t count, double side, double comm_radius,
                          std::vector<Obstacle> obstacles, std::uint64_t seed) {
  if (count == 0)
    throw ArgumentError("node count must be at least 1");
  if (!(side > 0.0))
    throw ArgumentError("side must be positive");

  Rng rng(seed);
  std::vector<Point2D> positions;
  positions.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    int rejections = 0;
    for (;;) {
      const double x = rng.uniform(0.0, side);
      const double y = rng.uniform(0.0, side);
      const Point2D p{x, y};
      if (std::none_of(obstacles.begin(), obstacles.end(),
                       [&](const Obstacle &o) { return o.contains(p); })) {
        positions.push_back(p);
        break;
      }
      if (++rejections >= kMaxConsecutiveRejections)
        throw GenerationError("node " + std::to_string(i) + ": " +
                              std::to_string(kMaxConsecutiveRejections) +
                              " consecutive placements fell inside obstacles");
    }
  }
  return Topology::from_positions(std::move(positions), side, comm_radius,
                                  std::move(obstacles));
}

Topology place_boundary_anchors(const Topology &topology, std::size_t k) {
  if (k < 2)
    throw ArgumentError("boundary placement needs k >= 2");
  const double s = topology.side();
  const double perimeter = 4.0 * s;
  std::vector<AnchorSpec> anchors;
  anchors.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double t = perimeter * static_cast<double>(i) / static_cast<double>(k);
    Point2D p;
    if (t < s)
      p = {t, 0.0};
    else if (t < 2.0 * s)
      p = {s, t - s};
    else if (t < 3.0 * s)
      p = {3.0 * s - t, s};
    else
      p = {0.0, perimeter - t};
    anchors.emplace_back(PositionedAnchor{p, std::nullopt});
  }
  return topology.with_anchors(std::move(anchors));
}

Topology place_random_anchors(const Topology &topology, std::size_t k,
                              std::uint64_t seed) {
  if (k == 0)
    throw ArgumentError("random placement needs k >= 1");
  if (k > topology.size())
    throw ArgumentError("cannot draw " + std::to_string(k) + " anchors from " +
                        std::to_string(topology.size()) + " nodes");
  // Partial Fisher-Yates.
  std::vector<NodeId> ids(topology.size());
  std::iota(ids.begin(), ids.end(), NodeId{0});
  Rng rng(seed);
  std::vector<AnchorSpec> anchors;
  anchors.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.below(ids.size() - i);
    std::swap(ids[i], ids[j]);
    anchors.emplace_back(PositionedAnchor{topology.position(ids[i]), ids[i]});
  }
  return topology.with_anchors(std::move(anchors));
}

Topology place_external_anchors(const Topology &topology,
                                std::span<const Point2D> points) {
  if (points.empty())
    throw ArgumentError("external placement needs at least one point");
  std::vector<AnchorSpec> anchors;
  anchors.reserve(points.size());
  for (const auto &p : points)
    anchors.emplace_back(PositionedAnchor{p, std::nullopt});
  return topology.with_anchors(std::move(anchors));
}

Topology place_infinite_ne_anchors(const Topology &topology, double offset) {
  return topology.with_anchors({DirectionalAnchor{{1.0, 0.0}, offset},
                                DirectionalAnchor{{0.0, 1.0}, offset}});
}

std::vector<std::uint32_t> hop_distances(const Topology &topology, NodeId source) {
  if (!topology.valid(source))
    throw ArgumentError("invalid node id " + std::to_string(source));
  std::vector<std::uint32_t> out;
  kernels::bfs(topology.adjacency(), source, out);
  return out;
}

std::optional<std::uint32_t> shortest_path_hops(const Topology &topology,
                                                NodeId source, NodeId target) {
  if (!topology.valid(target))
    throw ArgumentError("invalid node id " + std::to_string(target));
  const auto d = hop_distances(topology, source)[target];
  if (d == kUnreachableHops)
    return std::nullopt;
  return d;
}

NodeId nearest_node(const Topology &topology, Point2D p) {
  if (topology.size() == 0)
    throw ArgumentError("empty topology");
  NodeId best = 0;
  double best_d = distance(topology.position(0), p);
  for (NodeId u = 1; u < topology.size(); ++u) {
    const double d = distance(topology.position(u), p);
    if (d < best_d) {
      best_d = d;
      best = u;
    }
  }
  return best;
}

HopMatrix all_pairs_hops(const Topology &topology, Execution exec) {
  return exec == Execution::Serial ? kernels::serial::all_pairs_hops(topology.adjacency())
                                   : kernels::omp::all_pairs_hops(topology.adjacency());
}

std::uint32_t hop_diameter(const HopMatrix &matrix) noexcept {
  std::uint32_t d = 0;
  for (auto h : matrix.hops)
    if (h != kUnreachableHops && h > d)
      d = h;
  return d;
}

} // namespace anchorspace
