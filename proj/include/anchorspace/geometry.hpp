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

#include <cmath>

namespace anchorspace {

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D &, const Point2D &) = default;
};

inline double distance(Point2D a, Point2D b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double dot(Point2D a, Point2D b) noexcept { return a.x * b.x + a.y * b.y; }

/// Minimum distance from `p` to the closed segment [a, b].
inline double segment_distance(Point2D p, Point2D a, Point2D b) noexcept {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
  }
  return distance(p, Point2D{a.x + t * dx, a.y + t * dy});
}

/// Disk obstacle. Nodes may not sit inside it and radio links may not cross it.
struct Obstacle {
  Point2D center;
  double radius = 1.0;

  bool contains(Point2D p) const noexcept { return distance(p, center) <= radius; }
  bool blocks(Point2D a, Point2D b) const noexcept {
    return segment_distance(center, a, b) <= radius;
  }

  friend bool operator==(const Obstacle &, const Obstacle &) = default;
};

} // namespace anchorspace
