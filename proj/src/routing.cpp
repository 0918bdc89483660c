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

#include "anchorspace/routing.hpp"

#include <cmath>
#include <exception>
#include <sstream>

#include "anchorspace/error.hpp"
#include "anchorspace/format.hpp"

namespace anchorspace {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

double euclid(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void check_lengths(std::span<const double> current, std::span<const double> destination,
                   std::span<const Candidate> candidates) {
  if (current.size() != destination.size())
    throw ArgumentError("current and destination coordinates differ in length");
  for (const auto &c : candidates)
    if (c.coord.size() != current.size())
      throw ArgumentError("neighbor " + std::to_string(c.id) +
                          " coordinate length differs from current");
}

// Scales `v` to unit length in place; returns false (and leaves v) when v = 0.
bool normalize(std::vector<double> &v, OpCounter *ops) {
  if (ops)
    ops->add(v.size());
  const double n = euclid(v);
  if (!(n > 0.0))
    return false;
  for (double &x : v)
    x /= n;
  return true;
}

} // namespace

std::string describe(const RoutingPolicy &policy) {
  std::ostringstream os;
  if (const auto *in = std::get_if<Inertia>(&policy.algorithm))
    os << "inertia(" << format_real(in->lambda) << ')';
  else
    os << "greedy";
  if (std::holds_alternative<Classical2D>(policy.space)) {
    os << "/2d";
  } else {
    const auto &md = std::get<MultiDim>(policy.space);
    os << "/nd";
    if (md.norm != Norm::L2)
      os << '/' << to_string(md.norm);
    if (md.filter)
      os << "/filter";
    if (md.subset)
      os << "/subset" << md.subset->size();
  }
  return os.str();
}

const char *to_string(RouteStatus status) noexcept {
  switch (status) {
  case RouteStatus::Delivered:
    return "delivered";
  case RouteStatus::DroppedLocalMinimum:
    return "dropped_local_min";
  case RouteStatus::DroppedTtl:
    return "dropped_ttl";
  case RouteStatus::DroppedNoNeighbor:
    return "dropped_no_neighbor";
  }
  return "?";
}

std::optional<NodeId> greedy_step(std::span<const double> current,
                                  std::span<const double> destination,
                                  std::span<const Candidate> candidates, Norm norm,
                                  OpCounter *ops) {
  check_lengths(current, destination, candidates);
  const double here = coord_distance(current, destination, norm);
  if (ops)
    ops->add(current.size());
  std::optional<NodeId> best;
  double best_d = 0.0;
  for (const auto &c : candidates) {
    const double d = coord_distance(c.coord, destination, norm);
    if (ops)
      ops->add(current.size());
    if (!best || d < best_d || (d == best_d && c.id < *best)) {
      best = c.id;
      best_d = d;
    }
  }
  if (best && best_d < here)
    return best;
  return std::nullopt;
}

std::optional<InertiaChoice> inertia_step(const RoutingState &state,
                                          std::span<const double> current,
                                          std::span<const double> destination,
                                          std::span<const Candidate> candidates,
                                          double lambda, OpCounter *ops) {
  check_lengths(current, destination, candidates);
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw ArgumentError("inertia lambda must lie in [0, 1]");
  if (state.heading && state.heading->size() != current.size())
    throw ArgumentError("heading length differs from coordinate length");
  const std::size_t m = current.size();

  std::vector<double> toward(m);
  for (std::size_t i = 0; i < m; ++i)
    toward[i] = destination[i] - current[i];
  if (!normalize(toward, ops))
    std::fill(toward.begin(), toward.end(), 0.0);

  const std::vector<double> &heading = state.heading ? *state.heading : toward;
  std::vector<double> ideal(m);
  for (std::size_t i = 0; i < m; ++i)
    ideal[i] = lambda * toward[i] + (1.0 - lambda) * heading[i];
  if (!normalize(ideal, ops))
    ideal = toward;

  std::optional<NodeId> best;
  double best_cos = 0.0;
  std::vector<double> best_delta;
  std::vector<double> delta(m);
  for (const auto &c : candidates) {
    if (state.previous && c.id == *state.previous)
      continue;
    for (std::size_t i = 0; i < m; ++i)
      delta[i] = c.coord[i] - current[i];
    const double proj = dot(delta, ideal);
    const double len = euclid(delta);
    if (ops) {
      ops->add(m);
      ops->add(m);
    }
    // A move that leaves the coordinate unchanged has no direction; rank it
    // below every real move.
    const double cosine = len > 0.0 ? proj / len : -2.0;
    const bool better = !best || cosine > best_cos + kCosineTolerance ||
                        (std::abs(cosine - best_cos) <= kCosineTolerance && c.id < *best);
    if (better) {
      best = c.id;
      best_cos = cosine;
      best_delta = delta;
    }
  }
  if (!best)
    return std::nullopt;

  const double len = euclid(best_delta);
  if (len > 0.0) {
    for (double &x : best_delta)
      x /= len;
  } else {
    best_delta = ideal;
  }
  return InertiaChoice{*best, std::move(best_delta)};
}

std::vector<std::size_t> base_indices(const CoordinateSystem &system,
                                      const MultiDim &space, NodeId source,
                                      NodeId destination) {
  std::vector<std::size_t> idx;
  if (space.subset) {
    if (space.subset->empty())
      throw ArgumentError("subset projection needs at least one index");
    std::vector<bool> seen(system.dimensions(), false);
    for (std::size_t i : *space.subset) {
      if (i >= system.dimensions())
        throw ArgumentError("subset index " + std::to_string(i) + " out of range");
      if (seen[i])
        throw ArgumentError("duplicate subset index " + std::to_string(i));
      seen[i] = true;
    }
    idx = *space.subset;
  } else {
    idx.resize(system.dimensions());
    for (std::size_t i = 0; i < idx.size(); ++i)
      idx[i] = i;
  }
  const auto &s = system.at(source);
  const auto &d = system.at(destination);
  std::erase_if(idx, [&](std::size_t i) { return std::isinf(s[i]) || std::isinf(d[i]); });
  if (idx.empty())
    throw ArgumentError("no finite coordinate shared by nodes " + std::to_string(source) +
                        " and " + std::to_string(destination));
  return idx;
}

namespace {

// Per-message working set: gathers projected coordinates into flat scratch.
class RouteRunner {
public:
  RouteRunner(const Topology &topology, const CoordinateSystem *system,
              const RoutingPolicy &policy, NodeId source, NodeId destination)
      : topo_(topology), sys_(system), policy_(policy), dest_(destination) {
    if (!topology.valid(source) || !topology.valid(destination))
      throw ArgumentError("invalid node id in route request");
    if (policy.ttl < 1)
      throw ArgumentError("ttl must be at least 1");
    if (const auto *in = std::get_if<Inertia>(&policy.algorithm))
      if (!(in->lambda >= 0.0 && in->lambda <= 1.0))
        throw ArgumentError("inertia lambda must lie in [0, 1]");
    md_ = std::get_if<MultiDim>(&policy.space);
    if (md_) {
      if (sys_ == nullptr)
        throw ArgumentError("MULTI_DIM routing needs a coordinate system");
      if (sys_->size() != topology.size())
        throw ArgumentError("coordinate system does not match the topology");
      base_ = base_indices(*sys_, *md_, source, destination);
    }
    state_.current = source;
  }

  RoutingOutcome run() {
    RoutingOutcome out;
    out.path.push_back(state_.current);
    while (state_.current != dest_) {
      if (state_.hops_used >= policy_.ttl) {
        out.status = RouteStatus::DroppedTtl;
        break;
      }
      const auto next = step();
      if (!next) {
        out.status = std::holds_alternative<Greedy>(policy_.algorithm)
                         ? RouteStatus::DroppedLocalMinimum
                         : RouteStatus::DroppedNoNeighbor;
        break;
      }
      state_.previous = state_.current;
      state_.current = *next;
      ++state_.hops_used;
      out.path.push_back(*next);
    }
    if (state_.current == dest_)
      out.status = RouteStatus::Delivered;
    out.scalar_ops = ops_.scalar_ops;
    out.vector_ops = ops_.vector_ops;
    return out;
  }

private:
  void gather(NodeId u, std::span<const std::size_t> idx, std::vector<double> &out) const {
    if (!md_) {
      const Point2D p = topo_.position(u);
      out.push_back(p.x);
      out.push_back(p.y);
      return;
    }
    const auto &c = sys_->at(u);
    for (std::size_t i : idx)
      out.push_back(c[i]);
  }

  std::optional<NodeId> step() {
    std::span<const std::size_t> active = base_;
    std::vector<std::size_t> filtered;
    if (md_ && md_->filter) {
      scratch_.clear();
      gather(state_.current, base_, scratch_);
      gather(dest_, base_, scratch_);
      const std::span<const double> all(scratch_);
      ops_.add(base_.size());
      const auto kept = filter_anchors(all.first(base_.size()), all.last(base_.size()));
      filtered.reserve(kept.size());
      for (std::size_t k : kept)
        filtered.push_back(base_[k]);
      active = filtered;
    }

    const auto nbrs = topo_.neighbors(state_.current);
    scratch_.clear();
    gather(state_.current, active, scratch_);
    gather(dest_, active, scratch_);
    for (NodeId v : nbrs)
      gather(v, active, scratch_);
    const std::size_t m = md_ ? active.size() : 2;
    const std::span<const double> flat(scratch_);
    const auto current = flat.subspan(0, m);
    const auto destination = flat.subspan(m, m);
    candidates_.clear();
    for (std::size_t j = 0; j < nbrs.size(); ++j)
      candidates_.push_back({nbrs[j], flat.subspan((j + 2) * m, m)});

    std::optional<NodeId> next;
    if (std::holds_alternative<Greedy>(policy_.algorithm)) {
      next = greedy_step(current, destination, candidates_, md_ ? md_->norm : Norm::L2, &ops_);
    } else {
      next = inertia(current, destination, active, m);
    }
    state_.scalar_ops = ops_.scalar_ops;
    return next;
  }

  std::optional<NodeId> inertia(std::span<const double> current,
                                std::span<const double> destination,
                                std::span<const std::size_t> active, std::size_t m) {
    const double lambda = std::get<Inertia>(policy_.algorithm).lambda;
    const bool reprojects = md_ && md_->filter;
    RoutingState view = state_;
    if (reprojects && heading_base_) {
      // The stored heading spans every base coordinate; restrict it to the
      // coordinates surviving this hop's filter.
      std::vector<double> h;
      h.reserve(m);
      for (std::size_t i : active)
        h.push_back((*heading_base_)[base_position(i)]);
      if (normalize(h, &ops_))
        view.heading = std::move(h);
      else
        view.heading.reset();
    }
    auto choice = inertia_step(view, current, destination, candidates_, lambda, &ops_);
    if (!choice)
      return std::nullopt;
    if (reprojects) {
      std::vector<double> h;
      gather(choice->next, base_, h);
      std::vector<double> here;
      gather(state_.current, base_, here);
      for (std::size_t i = 0; i < h.size(); ++i)
        h[i] -= here[i];
      if (normalize(h, &ops_))
        heading_base_ = std::move(h);
    } else {
      state_.heading = std::move(choice->heading);
    }
    return choice->next;
  }

  std::size_t base_position(std::size_t anchor) const {
    for (std::size_t k = 0; k < base_.size(); ++k)
      if (base_[k] == anchor)
        return k;
    return 0;
  }

  const Topology &topo_;
  const CoordinateSystem *sys_;
  const RoutingPolicy &policy_;
  const MultiDim *md_ = nullptr;
  NodeId dest_;
  std::vector<std::size_t> base_;
  RoutingState state_;
  std::optional<std::vector<double>> heading_base_;
  OpCounter ops_;
  std::vector<double> scratch_;
  std::vector<Candidate> candidates_;
};

} // namespace

RoutingOutcome route(const Topology &topology, const CoordinateSystem *system,
                     const RoutingPolicy &policy, NodeId source, NodeId destination) {
  return RouteRunner(topology, system, policy, source, destination).run();
}

std::vector<RoutingOutcome> route_batch(const Topology &topology,
                                        const CoordinateSystem *system,
                                        const RoutingPolicy &policy,
                                        std::span<const NodePair> pairs, Execution exec) {
  std::vector<RoutingOutcome> out(pairs.size());
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      out[i] = route(topology, system, policy, pairs[i].first, pairs[i].second);
    return out;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(pairs.size()); ++i) {
    try {
      const auto &p = pairs[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i)] = route(topology, system, policy, p.first, p.second);
    } catch (...) {
#pragma omp critical(anchorspace_route_batch)
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  return out;
}

} // namespace anchorspace
