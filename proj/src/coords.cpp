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

#include "anchorspace/coords.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "anchorspace/error.hpp"
#include "anchorspace/format.hpp"

namespace anchorspace {

VirtualCoordinate exact_coordinate(Point2D position, std::span<const AnchorSpec> anchors) {
  if (anchors.empty())
    throw ArgumentError("exact_coordinate needs at least one anchor");
  std::vector<double> v(anchors.size());
  for (std::size_t i = 0; i < anchors.size(); ++i)
    v[i] = kernels::anchor_distance(position, anchors[i]);
  return VirtualCoordinate(std::move(v));
}

std::vector<NodeId> anchor_hosts(const Topology &topology) {
  std::vector<NodeId> hosts;
  hosts.reserve(topology.anchors().size());
  for (std::size_t i = 0; i < topology.anchors().size(); ++i) {
    const auto *pos = std::get_if<PositionedAnchor>(&topology.anchors()[i]);
    if (pos == nullptr)
      throw ModeError("hop-count coordinates are undefined for directional anchor " +
                      std::to_string(i));
    hosts.push_back(pos->node ? *pos->node : nearest_node(topology, pos->point));
  }
  return hosts;
}

std::vector<VirtualCoordinate> hop_coordinates(const Topology &topology, Execution exec) {
  const auto hosts = anchor_hosts(topology);
  const auto sweeps = exec == Execution::Serial
                          ? kernels::serial::multi_bfs(topology.adjacency(), hosts)
                          : kernels::omp::multi_bfs(topology.adjacency(), hosts);
  std::vector<VirtualCoordinate> table;
  table.reserve(topology.size());
  std::vector<double> row(hosts.size());
  for (NodeId u = 0; u < topology.size(); ++u) {
    for (std::size_t i = 0; i < hosts.size(); ++i)
      row[i] = sweeps[i][u] == kUnreachableHops ? kUnreachable
                                                : static_cast<double>(sweeps[i][u]);
    table.emplace_back(row);
  }
  return table;
}

double coord_distance(std::span<const double> a, std::span<const double> b, Norm norm) {
  if (a.size() != b.size())
    throw ArgumentError("coordinate length mismatch: " + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()));
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::isinf(a[i]) || std::isinf(b[i]))
      throw UnreachableComponentError(i);
    const double d = a[i] - b[i];
    switch (norm) {
    case Norm::L2:
      acc += d * d;
      break;
    case Norm::L1:
      acc += std::abs(d);
      break;
    case Norm::LInf:
      acc = std::max(acc, std::abs(d));
      break;
    }
  }
  return norm == Norm::L2 ? std::sqrt(acc) : acc;
}

std::vector<std::size_t> filter_anchors(std::span<const double> sender,
                                        std::span<const double> destination) {
  if (sender.empty() || destination.empty())
    throw ArgumentError("filter_anchors needs non-empty coordinates");
  if (sender.size() != destination.size())
    throw ArgumentError("coordinate length mismatch in filter_anchors");
  const double half_max = *std::max_element(sender.begin(), sender.end()) / 2.0;
  std::vector<std::size_t> kept;
  kept.reserve(sender.size());
  for (std::size_t i = 0; i < sender.size(); ++i)
    if (!(sender[i] < destination[i] && sender[i] < half_max))
      kept.push_back(i);
  if (kept.empty()) {
    kept.resize(sender.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
      kept[i] = i;
  }
  return kept;
}

VirtualCoordinate project_subset(std::span<const double> coord,
                                 std::span<const std::size_t> indices) {
  if (indices.empty())
    throw ArgumentError("subset projection needs at least one index");
  std::vector<bool> seen(coord.size(), false);
  std::vector<double> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= coord.size())
      throw ArgumentError("subset index " + std::to_string(i) + " out of range");
    if (seen[i])
      throw ArgumentError("duplicate subset index " + std::to_string(i));
    seen[i] = true;
    out.push_back(coord[i]);
  }
  return VirtualCoordinate(std::move(out));
}

CoordinateSystem build_system(const Topology &topology, DistanceMode mode, Norm norm,
                              Execution exec) {
  if (topology.anchors().empty())
    throw ArgumentError("coordinate system needs at least one anchor");
  CoordinateSystem sys;
  sys.anchors_.assign(topology.anchors().begin(), topology.anchors().end());
  sys.mode_ = mode;
  sys.norm_ = norm;
  if (mode == DistanceMode::HopCount) {
    sys.table_ = hop_coordinates(topology, exec);
  } else {
    auto rows = exec == Execution::Serial
                    ? kernels::serial::exact_table(topology.positions(), sys.anchors_)
                    : kernels::omp::exact_table(topology.positions(), sys.anchors_);
    sys.table_.reserve(rows.size());
    for (auto &r : rows)
      sys.table_.emplace_back(std::move(r));
  }
  return sys;
}

void write_coordinates_csv(std::ostream &out, const CoordinateSystem &system) {
  out << "node";
  for (std::size_t i = 0; i < system.dimensions(); ++i)
    out << ",anchor_" << i;
  out << '\n';
  for (NodeId u = 0; u < system.size(); ++u) {
    out << u;
    for (double v : system.at(u).values())
      out << ',' << format_real(v);
    out << '\n';
  }
}

const char *to_string(DistanceMode mode) noexcept {
  return mode == DistanceMode::Exact ? "exact" : "hop";
}

const char *to_string(Norm norm) noexcept {
  switch (norm) {
  case Norm::L2:
    return "l2";
  case Norm::L1:
    return "l1";
  case Norm::LInf:
    return "linf";
  }
  return "?";
}

} // namespace anchorspace
