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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "anchorspace/coords.hpp"
#include "anchorspace/kernels.hpp"
#include "anchorspace/topology.hpp"

namespace anchorspace {

struct Greedy {
  friend bool operator==(const Greedy &, const Greedy &) = default;
};

/// Greedy with inertia: the ideal direction blends the direction to the
/// destination (weight `lambda`) with the previous heading (1 - lambda).
struct Inertia {
  double lambda = 0.5;
  friend bool operator==(const Inertia &, const Inertia &) = default;
};

using Algorithm = std::variant<Greedy, Inertia>;

/// Route on ground-truth 2D positions.
struct Classical2D {
  friend bool operator==(const Classical2D &, const Classical2D &) = default;
};

/// Route on virtual coordinates. `filter` recomputes the anchor filter at
/// every hop; `subset` is a static projection applied first.
struct MultiDim {
  Norm norm = Norm::L2;
  bool filter = false;
  std::optional<std::vector<std::size_t>> subset;
  friend bool operator==(const MultiDim &, const MultiDim &) = default;
};

using Space = std::variant<Classical2D, MultiDim>;

struct RoutingPolicy {
  Algorithm algorithm = Greedy{};
  Space space = MultiDim{};
  std::uint32_t ttl = 1000;

  friend bool operator==(const RoutingPolicy &, const RoutingPolicy &) = default;
};

/// Short label such as `greedy/nd`, `inertia(0.5)/2d` or `greedy/nd/filter`.
std::string describe(const RoutingPolicy &policy);

/// Cost accounting. Every scalar product or norm evaluation over a vector of
/// length m adds 1 to `vector_ops` and m to `scalar_ops`.
struct OpCounter {
  std::uint64_t vector_ops = 0;
  std::uint64_t scalar_ops = 0;

  void add(std::size_t length) noexcept {
    ++vector_ops;
    scalar_ops += length;
  }
};

struct Candidate {
  NodeId id;
  std::span<const double> coord;
};

/// Neighbor strictly closest to the destination, provided it is strictly
/// closer than `current`; lowest id on ties. nullopt marks a local minimum.
/// Costs 1 + |candidates| distance evaluations.
std::optional<NodeId> greedy_step(std::span<const double> current,
                                  std::span<const double> destination,
                                  std::span<const Candidate> candidates, Norm norm,
                                  OpCounter *ops = nullptr);

struct RoutingState {
  NodeId current = 0;
  std::optional<NodeId> previous;
  std::optional<std::vector<double>> heading;
  std::uint32_t hops_used = 0;
  std::uint64_t scalar_ops = 0;
};

struct InertiaChoice {
  NodeId next;
  std::vector<double> heading;
};

inline constexpr double kCosineTolerance = 1e-12;

/// One inertia hop. Candidates equal to `state.previous` are skipped; among
/// the rest the one whose displacement has the largest cosine with the ideal
/// direction wins (ties within kCosineTolerance go to the lowest id).
/// nullopt only when no eligible candidate exists. Costs 2 norm evaluations
/// plus a dot product and a norm per eligible candidate.
std::optional<InertiaChoice> inertia_step(const RoutingState &state,
                                          std::span<const double> current,
                                          std::span<const double> destination,
                                          std::span<const Candidate> candidates,
                                          double lambda, OpCounter *ops = nullptr);

enum class RouteStatus { Delivered, DroppedLocalMinimum, DroppedTtl, DroppedNoNeighbor };

const char *to_string(RouteStatus status) noexcept;

struct RoutingOutcome {
  RouteStatus status = RouteStatus::Delivered;
  std::vector<NodeId> path;
  std::uint64_t scalar_ops = 0;
  std::uint64_t vector_ops = 0;

  std::size_t hops() const noexcept { return path.empty() ? 0 : path.size() - 1; }
  bool delivered() const noexcept { return status == RouteStatus::Delivered; }

  friend bool operator==(const RoutingOutcome &, const RoutingOutcome &) = default;
};

/// Coordinates a MULTI_DIM route works over before any per-hop filter: the
/// static subset (or every anchor), minus components that are UNREACHABLE
/// at the source or the destination.
std::vector<std::size_t> base_indices(const CoordinateSystem &system,
                                      const MultiDim &space, NodeId source,
                                      NodeId destination);

/// Routes one message. `system` may be null for CLASSICAL_2D policies.
/// Throws ArgumentError on invalid ids or an inconsistent policy.
RoutingOutcome route(const Topology &topology, const CoordinateSystem *system,
                     const RoutingPolicy &policy, NodeId source, NodeId destination);

using NodePair = std::pair<NodeId, NodeId>;

/// Routes every pair; results are in pair order for either execution mode.
std::vector<RoutingOutcome> route_batch(const Topology &topology,
                                        const CoordinateSystem *system,
                                        const RoutingPolicy &policy,
                                        std::span<const NodePair> pairs,
                                        Execution exec = Execution::Parallel);

} // namespace anchorspace
