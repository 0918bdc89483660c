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

// Test-only reference computations. They share no code path with the
// kernels they check: adjacency is re-derived from positions, and hop
// distances come from Floyd-Warshall rather than BFS.

#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "anchorspace/coords.hpp"
#include "anchorspace/harness.hpp"
#include "anchorspace/routing.hpp"
#include "anchorspace/topology.hpp"

namespace oracle {

using namespace anchorspace;

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

inline bool segment_hits_disk(Point2D a, Point2D b, const Obstacle &o) {
  // Closest approach by dense sampling of the segment plus the analytic
  // endpoint checks; sampled approach for an independent check.
  const int steps = 2000;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) / steps;
    const double x = a.x + t * (b.x - a.x), y = a.y + t * (b.y - a.y);
    best = std::min(best, std::sqrt((x - o.center.x) * (x - o.center.x) +
                                    (y - o.center.y) * (y - o.center.y)));
  }
  return best <= o.radius;
}

/// All-pairs hops by Floyd-Warshall over the topology's own edge list.
inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Topology &t) {
  const std::size_t n = t.size();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (NodeId v : t.neighbors(static_cast<NodeId>(u)))
      d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kInf)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        if (d[k][j] != kInf && d[i][k] + d[k][j] < d[i][j])
          d[i][j] = d[i][k] + d[k][j];
    }
  return d;
}

/// Coordinates a MULTI_DIM greedy hop from `u` compared, re-derived for the check.
inline std::vector<std::size_t> hop_indices(const CoordinateSystem &sys, const MultiDim &md,
                                            NodeId u, NodeId source, NodeId dest) {
  auto base = base_indices(sys, md, source, dest);
  if (!md.filter)
    return base;
  std::vector<double> s, d;
  for (std::size_t i : base) {
    s.push_back(sys.at(u)[i]);
    d.push_back(sys.at(dest)[i]);
  }
  std::vector<std::size_t> out;
  for (std::size_t k : filter_anchors(s, d))
    out.push_back(base[k]);
  return out;
}

inline double space_distance(const Topology &t, const CoordinateSystem *sys,
                             const RoutingPolicy &p, std::span<const std::size_t> idx,
                             NodeId a, NodeId b) {
  if (std::holds_alternative<Classical2D>(p.space))
    return distance(t.position(a), t.position(b));
  std::vector<double> x, y;
  for (std::size_t i : idx) {
    x.push_back(sys->at(a)[i]);
    y.push_back(sys->at(b)[i]);
  }
  return coord_distance(x, y, std::get<MultiDim>(p.space).norm);
}

/// Universal trace validator: path validity for every policy, strict
/// distance decrease for greedy. Returns an empty string when the trace is
/// valid, otherwise a description of the first violation.
inline std::string validate_trace(const Topology &t, const CoordinateSystem *sys,
                                  const RoutingPolicy &policy, NodeId source, NodeId dest,
                                  std::uint32_t ttl, const RoutingOutcome &o) {
  std::ostringstream err;
  const auto &path = o.path;
  if (path.empty() || path.front() != source)
    return "path does not start at the source";
  if (path.size() > std::size_t{ttl} + 1)
    return "path longer than ttl + 1";
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!t.adjacent(path[i], path[i + 1])) {
      err << "hop " << i << " (" << path[i] << "->" << path[i + 1] << ") is not an edge";
      return err.str();
    }
  if (o.delivered() != (path.back() == dest))
    return "delivery status disagrees with the final node";
  if (std::holds_alternative<Greedy>(policy.algorithm)) {
    const MultiDim *md = std::get_if<MultiDim>(&policy.space);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      std::vector<std::size_t> idx;
      if (md)
        idx = hop_indices(*sys, *md, path[i], source, dest);
      const double here = space_distance(t, sys, policy, idx, path[i], dest);
      const double next = space_distance(t, sys, policy, idx, path[i + 1], dest);
      if (!(next < here)) {
        err << "greedy hop " << i << " does not decrease the distance (" << here << " -> "
            << next << ")";
        return err.str();
      }
    }
  }
  return {};
}

/// Closed-form cost of a route without filtering: every node where a step
/// decision was made contributes its per-step cost, times the dimension.
inline std::uint64_t predicted_scalar_ops(const Topology &t, const RoutingPolicy &p,
                                   const RoutingOutcome &o, std::size_t dims) {
  std::size_t steps = o.path.size() - 1;
  if (o.status == RouteStatus::DroppedLocalMinimum || o.status == RouteStatus::DroppedNoNeighbor)
    ++steps;
  const bool greedy = std::holds_alternative<Greedy>(p.algorithm);
  std::uint64_t vector_ops = 0;
  for (std::size_t i = 0; i < steps; ++i) {
    const std::size_t deg = t.neighbors(o.path[i]).size();
    if (greedy) {
      vector_ops += 1 + deg;
    } else {
      const std::size_t eligible = i == 0 ? deg : deg - 1;
      vector_ops += 2 + 2 * eligible;
    }
  }
  return vector_ops * dims;
}

} // namespace oracle
