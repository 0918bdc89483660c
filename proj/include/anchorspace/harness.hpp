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
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "anchorspace/coords.hpp"
#include "anchorspace/kernels.hpp"
#include "anchorspace/routing.hpp"
#include "anchorspace/topology.hpp"

namespace anchorspace {

struct TopologyParams {
  std::size_t nodes = 500;
  double side = 1.0;
  double radius = 0.08;
  std::vector<Obstacle> obstacles;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const TopologyParams &, const TopologyParams &) = default;
};

struct BoundaryPlacement {
  std::size_t k = 4;
  friend bool operator==(const BoundaryPlacement &, const BoundaryPlacement &) = default;
};
struct RandomPlacement {
  std::size_t k = 4;
  std::optional<std::uint64_t> seed;
  friend bool operator==(const RandomPlacement &, const RandomPlacement &) = default;
};
struct ExternalPlacement {
  std::vector<Point2D> points;
  friend bool operator==(const ExternalPlacement &, const ExternalPlacement &) = default;
};
struct InfiniteNePlacement {
  double offset = 0.0;
  friend bool operator==(const InfiniteNePlacement &, const InfiniteNePlacement &) = default;
};

using AnchorPlacement =
    std::variant<BoundaryPlacement, RandomPlacement, ExternalPlacement, InfiniteNePlacement>;

const char *placement_name(const AnchorPlacement &placement) noexcept;
std::size_t anchor_count(const AnchorPlacement &placement) noexcept;

/// A policy to evaluate. The ttl inside `policy` is ignored; every policy of
/// a scenario runs with the scenario ttl.
struct PolicySpec {
  std::optional<std::string> name;
  RoutingPolicy policy;

  std::string label() const { return name ? *name : describe(policy); }
  friend bool operator==(const PolicySpec &, const PolicySpec &) = default;
};

inline constexpr std::size_t kMinAnchors = 2;
inline constexpr std::size_t kMaxAnchors = 64;

struct ScenarioConfig {
  std::string name = "scenario";
  std::uint64_t seed = 1;
  TopologyParams topology;
  AnchorPlacement anchors = BoundaryPlacement{};
  DistanceMode mode = DistanceMode::Exact;
  std::vector<PolicySpec> policies;
  std::size_t pairs = 100;
  std::optional<std::uint64_t> pair_seed;
  /// Absent: 10 x the hop diameter of each replication's topology.
  std::optional<std::uint32_t> ttl;
  std::size_t replications = 5;

  friend bool operator==(const ScenarioConfig &, const ScenarioConfig &) = default;
};

/// Throws ConfigError naming the offending field(s).
void validate(const ScenarioConfig &config);

// Seed derivation. Every stream is keyed off the master seed unless the
// config pins it, then split per replication:
//   base_topology = topology.seed or derive_seed(seed, kTopologyStream)
//   topology(r)   = derive_seed(base_topology, kReplicationStream, r)
// and likewise for anchors and pairs. Policies never consume randomness, so
// adding a policy does not move any other draw.
inline constexpr std::uint64_t kTopologyStream = 0x746f706f;
inline constexpr std::uint64_t kAnchorStream = 0x616e6368;
inline constexpr std::uint64_t kPairStream = 0x70616972;
inline constexpr std::uint64_t kReplicationStream = 0x7265706c;

std::uint64_t topology_seed(const ScenarioConfig &config, std::size_t replication);
std::uint64_t anchor_seed(const ScenarioConfig &config, std::size_t replication);
std::uint64_t pair_seed(const ScenarioConfig &config, std::size_t replication);

/// Everything one replication routes over. Rebuilt identically on demand.
struct ReplicationContext {
  Topology topology;
  std::optional<CoordinateSystem> coords;
  HopMatrix hops;
  std::vector<NodePair> pairs;
  std::uint32_t diameter = 0;
  std::uint32_t ttl = 1;
};

ReplicationContext prepare_replication(const ScenarioConfig &config, std::size_t replication,
                                       Execution exec = Execution::Parallel);

/// Topology with the scenario's anchors placed, for the given replication.
Topology build_topology(const ScenarioConfig &config, std::size_t replication);

/// Uniform connected pairs (source != destination), by rejection.
std::vector<NodePair> sample_pairs(const HopMatrix &hops, std::size_t count,
                                   std::uint64_t seed);

struct MessageTrace {
  std::uint32_t replication = 0;
  NodeId source = 0;
  NodeId destination = 0;
  std::uint32_t optimal_hops = 0;
  std::uint32_t ttl = 1;
  RoutingOutcome outcome;

  friend bool operator==(const MessageTrace &, const MessageTrace &) = default;
};

struct PolicyResult {
  std::string name;
  RoutingPolicy policy;
  /// Anchors the policy routes over (0 for CLASSICAL_2D).
  std::size_t anchors_used = 0;
  std::size_t attempted = 0;
  std::size_t delivered = 0;
  double delivery_rate = 0.0;
  /// Means over delivered messages; NaN when nothing was delivered.
  double mean_hops = 0.0;
  double mean_stretch = 0.0;
  std::uint64_t total_scalar_ops = 0;
  std::size_t drop_local_min = 0;
  std::size_t drop_ttl = 0;
  std::size_t drop_no_neighbor = 0;
  std::vector<MessageTrace> traces;

  friend bool operator==(const PolicyResult &, const PolicyResult &) = default;
};

struct RunReport {
  std::string scenario;
  ScenarioConfig config;
  std::vector<PolicyResult> policies;

  const PolicyResult &policy(const std::string &name) const;
  friend bool operator==(const RunReport &, const RunReport &) = default;
};

struct RunOptions {
  bool keep_traces = true;
  Execution exec = Execution::Parallel;
};

RunReport run_scenario(const ScenarioConfig &config, const RunOptions &options = {});

struct GridEntry {
  std::optional<RunReport> report;
  std::string error;

  bool ok() const noexcept { return report.has_value(); }
};

/// Runs every config independently; a failing config records its error and
/// does not stop the others. Results follow input order.
std::vector<GridEntry> run_grid(const std::vector<ScenarioConfig> &configs,
                                const RunOptions &options = {});

struct BaselineComparison {
  std::vector<bool> path_equal;
  std::size_t equal_count = 0;
  bool all_equal = false;
  double delta_delivery_rate = 0.0;
  double delta_mean_hops = 0.0;
  double delta_mean_stretch = 0.0;
  std::int64_t delta_scalar_ops = 0;
};

/// Message-by-message comparison of two policy results over the same
/// messages (deltas are `nd - baseline`). Throws ArgumentError when the
/// message sets differ or traces were not kept.
BaselineComparison compare_baseline(const PolicyResult &baseline, const PolicyResult &nd);

/// Prefix-subset variants of `base` for every size in `sizes`.
std::vector<PolicySpec> subset_policies(const RoutingPolicy &base,
                                        const std::vector<std::size_t> &sizes);

inline constexpr const char *kResultsHeader =
    "scenario,policy,anchors,placement,mode,norm,delivery_rate,mean_hops,mean_stretch,"
    "scalar_ops,drop_local_min,drop_ttl,drop_no_neighbor";

void write_results_csv(std::ostream &out, const std::vector<RunReport> &reports);

/// One row per message: scenario,policy,replication,source,destination,status,hops,optimal_hops,path
void write_traces_csv(std::ostream &out, const std::vector<RunReport> &reports);

} // namespace anchorspace
