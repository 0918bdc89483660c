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

#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "anchorspace/kernels.hpp"
#include "anchorspace/topology.hpp"

namespace anchorspace {

enum class DistanceMode { Exact, HopCount };
enum class Norm { L2, L1, LInf };

/// Sentinel for a hop-count component whose anchor host is unreachable.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// A node's distances to the anchor set, in anchor-list order. Units are
/// distance units in exact mode and hops in hop-count mode.
class VirtualCoordinate {
public:
  VirtualCoordinate() = default;
  explicit VirtualCoordinate(std::vector<double> values) : values_(std::move(values)) {}
  VirtualCoordinate(std::initializer_list<double> values) : values_(values) {}

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  operator std::span<const double>() const noexcept { return values_; }

  friend bool operator==(const VirtualCoordinate &, const VirtualCoordinate &) = default;

private:
  std::vector<double> values_;
};

/// Exact coordinate of a point: Euclidean distance to each positioned anchor,
/// `offset - position . direction` for each directional anchor.
VirtualCoordinate exact_coordinate(Point2D position, std::span<const AnchorSpec> anchors);

/// The node each anchor is measured from in hop-count mode: its host node,
/// or the nearest node (lowest id on ties) for a pure beacon. Throws
/// ModeError on directional anchors.
std::vector<NodeId> anchor_hosts(const Topology &topology);

/// BFS hop coordinates of every node, one sweep per anchor.
std::vector<VirtualCoordinate> hop_coordinates(const Topology &topology,
                                               Execution exec = Execution::Parallel);

/// Norm of a − b. Throws ArgumentError on a length mismatch and
/// UnreachableComponentError when either side holds the sentinel.
double coord_distance(std::span<const double> a, std::span<const double> b,
                      Norm norm = Norm::L2);

/// Indices of anchors kept for a hop from `sender` toward `destination`.
/// Anchor i is dropped when sender[i] < destination[i] and
/// sender[i] < max_j sender[j] / 2. Returns every index if that would drop
/// them all.
std::vector<std::size_t> filter_anchors(std::span<const double> sender,
                                        std::span<const double> destination);

VirtualCoordinate project_subset(std::span<const double> coord,
                                 std::span<const std::size_t> indices);

/// Per-node coordinate table over a fixed anchor set. Immutable once built.
class CoordinateSystem {
public:
  std::span<const AnchorSpec> anchors() const noexcept { return anchors_; }
  DistanceMode mode() const noexcept { return mode_; }
  Norm norm() const noexcept { return norm_; }
  std::size_t dimensions() const noexcept { return anchors_.size(); }
  std::size_t size() const noexcept { return table_.size(); }
  const VirtualCoordinate &at(NodeId id) const { return table_.at(id); }

  friend CoordinateSystem build_system(const Topology &, DistanceMode, Norm, Execution);

private:
  std::vector<AnchorSpec> anchors_;
  DistanceMode mode_ = DistanceMode::Exact;
  Norm norm_ = Norm::L2;
  std::vector<VirtualCoordinate> table_;
};

CoordinateSystem build_system(const Topology &topology, DistanceMode mode,
                              Norm norm = Norm::L2, Execution exec = Execution::Parallel);

/// CSV dump: `node,anchor_0,...,anchor_{n-1}`, UNREACHABLE written as `inf`.
void write_coordinates_csv(std::ostream &out, const CoordinateSystem &system);

const char *to_string(DistanceMode mode) noexcept;
const char *to_string(Norm norm) noexcept;

} // namespace anchorspace
