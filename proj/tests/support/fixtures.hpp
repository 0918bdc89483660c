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

#include <vector>

#include "anchorspace/topology.hpp"

namespace fixtures {

using namespace anchorspace;

/// Collinear nodes 0-1-...-(n-1) with spacing equal to the radius.
inline Topology path_graph(std::size_t n, double spacing = 1.0) {
  std::vector<Point2D> pts;
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back({spacing * static_cast<double>(i), 0.0});
  return Topology::from_positions(pts, spacing * static_cast<double>(n), spacing);
}

/// w x h lattice with unit spacing and 4-neighbor links; node (i, j) has id j * w + i.
inline Topology grid_graph(std::size_t w, std::size_t h) {
  std::vector<Point2D> pts;
  for (std::size_t j = 0; j < h; ++j)
    for (std::size_t i = 0; i < w; ++i)
      pts.push_back({static_cast<double>(i), static_cast<double>(j)});
  return Topology::from_positions(pts, static_cast<double>(std::max(w, h)), 1.0);
}

/// 21 x 21 unit lattice with 8-neighbor links (radius 1.5) and a U-shaped
/// wall of disk obstacles opening downward: a bar on row 12 over columns
/// 6..14 and one extra cell at (6, 11) and (14, 11). Lattice points under
/// the wall are left out. Source (10, 2) sits below the cup, destination
/// (10, 18) above it.
struct UShape {
  Topology topology;
  NodeId source;
  NodeId destination;
};

inline UShape u_shape() {
  std::vector<Point2D> pts;
  std::vector<Obstacle> wall;
  NodeId source = 0, destination = 0;
  for (int y = 0; y < 21; ++y)
    for (int x = 0; x < 21; ++x) {
      const bool bar = x >= 6 && x <= 14 && y == 12;
      const bool arm = (x == 6 || x == 14) && y == 11;
      if (bar || arm) {
        wall.push_back({{double(x), double(y)}, 0.45});
        continue;
      }
      if (x == 10 && y == 2)
        source = static_cast<NodeId>(pts.size());
      if (x == 10 && y == 18)
        destination = static_cast<NodeId>(pts.size());
      pts.push_back({double(x), double(y)});
    }
  return {Topology::from_positions(pts, 21.0, 1.5, wall), source, destination};
}

/// Anchor-in-the-middle: X = (0, 0), Y = (3, 0) and A1 = (1, 0) with
/// XY = 3 XA, plus A2 = (0, 10) and A3 = (3, 10). Nodes lie on y = 0 from
/// x = -2 to x = 3.5 with spacing 0.5 and link only to their two lattice
/// neighbors.
struct AnchorInTheMiddle {
  Topology topology;
  NodeId x;
  NodeId y;
};

inline AnchorInTheMiddle anchor_in_the_middle() {
  std::vector<Point2D> pts;
  for (int i = 0; i < 12; ++i)
    pts.push_back({-2.0 + 0.5 * i, 0.0});
  auto t = Topology::from_positions(pts, 6.0, 0.725);
  const std::vector<Point2D> anchors{{1.0, 0.0}, {0.0, 10.0}, {3.0, 10.0}};
  return {place_external_anchors(t, anchors), 4, 10};
}

} // namespace fixtures
