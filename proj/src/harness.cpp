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

#include "anchorspace/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <ostream>
#include <sstream>

#include "anchorspace/error.hpp"
#include "anchorspace/format.hpp"
#include "anchorspace/rng.hpp"

namespace anchorspace {

const char *placement_name(const AnchorPlacement &placement) noexcept {
  struct {
    const char *operator()(const BoundaryPlacement &) const { return "boundary"; }
    const char *operator()(const RandomPlacement &) const { return "random"; }
    const char *operator()(const ExternalPlacement &) const { return "external"; }
    const char *operator()(const InfiniteNePlacement &) const { return "infinite_ne"; }
  } v;
  return std::visit(v, placement);
}

std::size_t anchor_count(const AnchorPlacement &placement) noexcept {
  struct {
    std::size_t operator()(const BoundaryPlacement &p) const { return p.k; }
    std::size_t operator()(const RandomPlacement &p) const { return p.k; }
    std::size_t operator()(const ExternalPlacement &p) const { return p.points.size(); }
    std::size_t operator()(const InfiniteNePlacement &) const { return 2; }
  } v;
  return std::visit(v, placement);
}

void validate(const ScenarioConfig &c) {
  auto fail = [&](const std::string &msg) {
    throw ConfigError("scenario '" + c.name + "': " + msg);
  };
  auto csv_safe = [](const std::string &s) {
    return s.find_first_of(",\n\r") == std::string::npos;
  };
  if (!csv_safe(c.name))
    fail("name must not contain commas or line breaks");
  if (c.topology.nodes < 1)
    fail("topology.nodes must be at least 1");
  if (!(c.topology.side > 0.0))
    fail("topology.side must be positive");
  if (!(c.topology.radius > 0.0))
    fail("topology.radius must be positive");
  for (std::size_t i = 0; i < c.topology.obstacles.size(); ++i)
    if (!(c.topology.obstacles[i].radius > 0.0))
      fail("topology.obstacles[" + std::to_string(i) + "].r must be positive");

  const std::size_t k = anchor_count(c.anchors);
  if (std::holds_alternative<BoundaryPlacement>(c.anchors) ||
      std::holds_alternative<RandomPlacement>(c.anchors)) {
    if (k < kMinAnchors || k > kMaxAnchors)
      fail("anchors.k must lie in [2, 64], got " + std::to_string(k));
  }
  if (std::holds_alternative<RandomPlacement>(c.anchors) && k > c.topology.nodes)
    fail("anchors.k (" + std::to_string(k) + ") exceeds topology.nodes (" +
         std::to_string(c.topology.nodes) + ")");
  if (const auto *ext = std::get_if<ExternalPlacement>(&c.anchors))
    if (ext->points.empty() || ext->points.size() > kMaxAnchors)
      fail("anchors.points must hold between 1 and 64 points");
  if (std::holds_alternative<InfiniteNePlacement>(c.anchors) &&
      c.mode == DistanceMode::HopCount)
    fail("anchors.placement=infinite_ne requires mode=exact, got mode=hop");

  if (c.policies.empty())
    fail("policies must not be empty");
  for (std::size_t i = 0; i < c.policies.size(); ++i) {
    const auto &p = c.policies[i].policy;
    const std::string where = "policies[" + std::to_string(i) + "]";
    if (c.policies[i].name && !csv_safe(*c.policies[i].name))
      fail(where + ".name must not contain commas or line breaks");
    if (const auto *in = std::get_if<Inertia>(&p.algorithm))
      if (!(in->lambda >= 0.0 && in->lambda <= 1.0))
        fail(where + ".lambda must lie in [0, 1]");
    if (const auto *md = std::get_if<MultiDim>(&p.space); md && md->subset) {
      if (md->subset->empty())
        fail(where + ".subset must not be empty");
      std::vector<bool> seen(k, false);
      for (std::size_t idx : *md->subset) {
        if (idx >= k)
          fail(where + ".subset index " + std::to_string(idx) + " out of range");
        if (seen[idx])
          fail(where + ".subset index " + std::to_string(idx) + " repeated");
        seen[idx] = true;
      }
    }
  }
  if (c.pairs < 1)
    fail("pairs must be at least 1");
  if (c.replications < 1)
    fail("replications must be at least 1");
  if (c.ttl && *c.ttl < 1)
    fail("ttl must be at least 1");
}

std::uint64_t topology_seed(const ScenarioConfig &c, std::size_t r) {
  const auto base = c.topology.seed.value_or(derive_seed(c.seed, kTopologyStream));
  return derive_seed(base, kReplicationStream, r);
}

std::uint64_t anchor_seed(const ScenarioConfig &c, std::size_t r) {
  const auto *rp = std::get_if<RandomPlacement>(&c.anchors);
  const auto base = rp && rp->seed ? *rp->seed : derive_seed(c.seed, kAnchorStream);
  return derive_seed(base, kReplicationStream, r);
}

std::uint64_t pair_seed(const ScenarioConfig &c, std::size_t r) {
  const auto base = c.pair_seed.value_or(derive_seed(c.seed, kPairStream));
  return derive_seed(base, kReplicationStream, r);
}

Topology build_topology(const ScenarioConfig &c, std::size_t r) {
  const auto &tp = c.topology;
  Topology t = generate_uniform(tp.nodes, tp.side, tp.radius, tp.obstacles, topology_seed(c, r));
  struct {
    const Topology &t;
    std::uint64_t seed;
    Topology operator()(const BoundaryPlacement &p) const {
      return place_boundary_anchors(t, p.k);
    }
    Topology operator()(const RandomPlacement &p) const {
      return place_random_anchors(t, p.k, seed);
    }
    Topology operator()(const ExternalPlacement &p) const {
      return place_external_anchors(t, p.points);
    }
    Topology operator()(const InfiniteNePlacement &p) const {
      return place_infinite_ne_anchors(t, p.offset);
    }
  } place{t, anchor_seed(c, r)};
  return std::visit(place, c.anchors);
}

std::vector<NodePair> sample_pairs(const HopMatrix &hops, std::size_t count,
                                   std::uint64_t seed) {
  std::vector<NodePair> pairs;
  pairs.reserve(count);
  if (hops.n < 2)
    throw ConfigError("cannot sample message pairs from fewer than two nodes");
  Rng rng(seed);
  const std::size_t max_attempts = 1000 * count + 10'000;
  std::size_t attempts = 0;
  while (pairs.size() < count) {
    if (++attempts > max_attempts)
      throw ConfigError("could not sample enough connected message pairs");
    const auto s = static_cast<NodeId>(rng.below(hops.n));
    const auto t = static_cast<NodeId>(rng.below(hops.n));
    if (s == t || hops.at(s, t) == kUnreachableHops)
      continue;
    pairs.emplace_back(s, t);
  }
  return pairs;
}

ReplicationContext prepare_replication(const ScenarioConfig &config, std::size_t r,
                                       Execution exec) {
  validate(config);
  ReplicationContext ctx{build_topology(config, r), std::nullopt, {}, {}, 0, 1};
  const bool needs_coords = std::any_of(
      config.policies.begin(), config.policies.end(),
      [](const PolicySpec &p) { return std::holds_alternative<MultiDim>(p.policy.space); });
  if (needs_coords)
    ctx.coords = build_system(ctx.topology, config.mode, Norm::L2, exec);
  ctx.hops = all_pairs_hops(ctx.topology, exec);
  ctx.diameter = hop_diameter(ctx.hops);
  ctx.ttl = config.ttl ? *config.ttl : std::max<std::uint32_t>(1, 10 * ctx.diameter);
  ctx.pairs = sample_pairs(ctx.hops, config.pairs, pair_seed(config, r));
  return ctx;
}

const PolicyResult &RunReport::policy(const std::string &name) const {
  for (const auto &p : policies)
    if (p.name == name)
      return p;
  throw ArgumentError("report '" + scenario + "' has no policy '" + name + "'");
}

RunReport run_scenario(const ScenarioConfig &config, const RunOptions &options) {
  validate(config);
  RunReport report;
  report.scenario = config.name;
  report.config = config;
  report.policies.resize(config.policies.size());
  std::vector<double> hop_sum(config.policies.size(), 0.0);
  std::vector<double> stretch_sum(config.policies.size(), 0.0);

  for (std::size_t i = 0; i < config.policies.size(); ++i) {
    auto &pr = report.policies[i];
    pr.name = config.policies[i].label();
    pr.policy = config.policies[i].policy;
    if (const auto *md = std::get_if<MultiDim>(&pr.policy.space))
      pr.anchors_used = md->subset ? md->subset->size() : anchor_count(config.anchors);
  }

  for (std::size_t r = 0; r < config.replications; ++r) {
    const auto ctx = prepare_replication(config, r, options.exec);
    const CoordinateSystem *sys = ctx.coords ? &*ctx.coords : nullptr;
    for (std::size_t i = 0; i < config.policies.size(); ++i) {
      auto &pr = report.policies[i];
      RoutingPolicy policy = config.policies[i].policy;
      policy.ttl = ctx.ttl;
      const auto outcomes = route_batch(ctx.topology, sys, policy, ctx.pairs, options.exec);
      for (std::size_t m = 0; m < outcomes.size(); ++m) {
        const auto &o = outcomes[m];
        const auto [s, t] = ctx.pairs[m];
        const std::uint32_t optimal = ctx.hops.at(s, t);
        ++pr.attempted;
        pr.total_scalar_ops += o.scalar_ops;
        switch (o.status) {
        case RouteStatus::Delivered:
          ++pr.delivered;
          hop_sum[i] += static_cast<double>(o.hops());
          stretch_sum[i] += static_cast<double>(o.hops()) / static_cast<double>(optimal);
          break;
        case RouteStatus::DroppedLocalMinimum:
          ++pr.drop_local_min;
          break;
        case RouteStatus::DroppedTtl:
          ++pr.drop_ttl;
          break;
        case RouteStatus::DroppedNoNeighbor:
          ++pr.drop_no_neighbor;
          break;
        }
        if (options.keep_traces)
          pr.traces.push_back(MessageTrace{static_cast<std::uint32_t>(r), s, t, optimal,
                                           ctx.ttl, o});
      }
    }
  }

  for (std::size_t i = 0; i < report.policies.size(); ++i) {
    auto &pr = report.policies[i];
    pr.delivery_rate = static_cast<double>(pr.delivered) / static_cast<double>(pr.attempted);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    pr.mean_hops = pr.delivered ? hop_sum[i] / static_cast<double>(pr.delivered) : nan;
    pr.mean_stretch = pr.delivered ? stretch_sum[i] / static_cast<double>(pr.delivered) : nan;
  }
  return report;
}

std::vector<GridEntry> run_grid(const std::vector<ScenarioConfig> &configs,
                                const RunOptions &options) {
  if (configs.empty())
    throw ArgumentError("run_grid needs at least one config");
  std::vector<GridEntry> out(configs.size());
  auto run_one = [&](std::size_t i, Execution inner) {
    try {
      RunOptions o = options;
      o.exec = inner;
      out[i].report = run_scenario(configs[i], o);
    } catch (const std::exception &e) {
      out[i].error = e.what();
    }
  };
  if (options.exec == Execution::Serial) {
    for (std::size_t i = 0; i < configs.size(); ++i)
      run_one(i, Execution::Serial);
    return out;
  }
  // Parallel across configs; each scenario then runs its kernels serially.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(configs.size()); ++i)
    run_one(static_cast<std::size_t>(i), Execution::Serial);
  return out;
}

BaselineComparison compare_baseline(const PolicyResult &baseline, const PolicyResult &nd) {
  if (baseline.traces.size() != nd.traces.size())
    throw ArgumentError("baseline comparison needs the same message count");
  if (baseline.traces.empty() && baseline.attempted > 0)
    throw ArgumentError("baseline comparison needs message traces");
  BaselineComparison cmp;
  cmp.path_equal.reserve(nd.traces.size());
  for (std::size_t i = 0; i < nd.traces.size(); ++i) {
    const auto &a = baseline.traces[i];
    const auto &b = nd.traces[i];
    if (a.replication != b.replication || a.source != b.source ||
        a.destination != b.destination)
      throw ArgumentError("baseline comparison: message " + std::to_string(i) +
                          " differs between reports");
    const bool eq = a.outcome.path == b.outcome.path;
    cmp.path_equal.push_back(eq);
    cmp.equal_count += eq ? 1 : 0;
  }
  cmp.all_equal = cmp.equal_count == cmp.path_equal.size();
  auto delta = [](double x, double y) {
    if (std::isnan(x) && std::isnan(y))
      return 0.0;
    return y - x;
  };
  cmp.delta_delivery_rate = delta(baseline.delivery_rate, nd.delivery_rate);
  cmp.delta_mean_hops = delta(baseline.mean_hops, nd.mean_hops);
  cmp.delta_mean_stretch = delta(baseline.mean_stretch, nd.mean_stretch);
  cmp.delta_scalar_ops = static_cast<std::int64_t>(nd.total_scalar_ops) -
                         static_cast<std::int64_t>(baseline.total_scalar_ops);
  return cmp;
}

std::vector<PolicySpec> subset_policies(const RoutingPolicy &base,
                                        const std::vector<std::size_t> &sizes) {
  if (!std::holds_alternative<MultiDim>(base.space))
    throw ArgumentError("subset policies need a MULTI_DIM base policy");
  std::vector<PolicySpec> out;
  for (std::size_t m : sizes) {
    RoutingPolicy p = base;
    auto &md = std::get<MultiDim>(p.space);
    md.subset = std::vector<std::size_t>(m);
    for (std::size_t i = 0; i < m; ++i)
      (*md.subset)[i] = i;
    out.push_back({std::nullopt, std::move(p)});
  }
  return out;
}

void write_results_csv(std::ostream &out, const std::vector<RunReport> &reports) {
  out << kResultsHeader << '\n';
  for (const auto &r : reports) {
    for (const auto &p : r.policies) {
      const auto *md = std::get_if<MultiDim>(&p.policy.space);
      out << r.scenario << ',' << p.name << ',' << p.anchors_used << ','
          << placement_name(r.config.anchors) << ',' << to_string(r.config.mode) << ','
          << to_string(md ? md->norm : Norm::L2) << ',' << format_real(p.delivery_rate) << ','
          << format_real(p.mean_hops) << ',' << format_real(p.mean_stretch) << ','
          << p.total_scalar_ops << ',' << p.drop_local_min << ',' << p.drop_ttl << ','
          << p.drop_no_neighbor << '\n';
    }
  }
}

void write_traces_csv(std::ostream &out, const std::vector<RunReport> &reports) {
  out << "scenario,policy,replication,source,destination,status,hops,optimal_hops,path\n";
  for (const auto &r : reports)
    for (const auto &p : r.policies)
      for (const auto &t : p.traces) {
        out << r.scenario << ',' << p.name << ',' << t.replication << ',' << t.source << ','
            << t.destination << ',' << to_string(t.outcome.status) << ',' << t.outcome.hops()
            << ',' << t.optimal_hops << ',';
        for (std::size_t i = 0; i < t.outcome.path.size(); ++i)
          out << (i ? " " : "") << t.outcome.path[i];
        out << '\n';
      }
}

} // namespace anchorspace
