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

#include <doctest.h>

#include <cmath>

#include "anchorspace/error.hpp"
#include "anchorspace/harness.hpp"
#include "anchorspace/routing.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace anchorspace;

namespace {

std::vector<Candidate> candidates(const std::vector<std::pair<NodeId, VirtualCoordinate>> &in) {
  std::vector<Candidate> out;
  for (const auto &[id, c] : in)
    out.push_back({id, c.values()});
  return out;
}

} // namespace

TEST_CASE("greedy_step") {
  const VirtualCoordinate cur{0, 0}, dest{10, 0};
  const std::vector<std::pair<NodeId, VirtualCoordinate>> nb{
      {1, {1, 0}}, {2, {0, 1}}, {3, {-1, 0}}};
  CHECK(greedy_step(cur, dest, candidates(nb), Norm::L2) == NodeId{1});

  const std::vector<std::pair<NodeId, VirtualCoordinate>> worse{{4, {-1, 0}}, {5, {0, 1}}};
  CHECK_FALSE(greedy_step(cur, dest, candidates(worse), Norm::L2).has_value());
  CHECK_FALSE(greedy_step(cur, dest, {}, Norm::L2).has_value());

  const std::vector<std::pair<NodeId, VirtualCoordinate>> tie{{9, {1, 1}}, {4, {1, -1}}};
  CHECK(greedy_step(cur, dest, candidates(tie), Norm::L2) == NodeId{4});

  // Equal to current distance is not progress.
  const std::vector<std::pair<NodeId, VirtualCoordinate>> flat{{1, {0, 0}}};
  CHECK_FALSE(greedy_step(cur, dest, candidates(flat), Norm::L2).has_value());

  const std::vector<std::pair<NodeId, VirtualCoordinate>> bad{{1, {1, 0, 0}}};
  CHECK_THROWS_AS(greedy_step(cur, dest, candidates(bad), Norm::L2), ArgumentError);

  OpCounter ops;
  greedy_step(cur, dest, candidates(nb), Norm::L2, &ops);
  CHECK(ops.vector_ops == 4);
  CHECK(ops.scalar_ops == 8);
}

TEST_CASE("inertia_step") {
  SUBCASE("blended direction") {
    RoutingState st;
    st.heading = std::vector<double>{1, 0};
    const std::vector<std::pair<NodeId, VirtualCoordinate>> nb{{1, {0, 1}}, {2, {1, 1}}};
    const auto c = inertia_step(st, VirtualCoordinate{0, 0}, VirtualCoordinate{0, 10},
                                candidates(nb), 0.5);
    REQUIRE(c);
    CHECK(c->next == 2);
    CHECK(c->heading[0] == doctest::Approx(std::sqrt(0.5)));
    CHECK(c->heading[1] == doctest::Approx(std::sqrt(0.5)));
  }
  SUBCASE("lambda = 1 ignores the heading") {
    RoutingState st;
    st.heading = std::vector<double>{0, 1};
    const std::vector<std::pair<NodeId, VirtualCoordinate>> nb{{1, {1, 1}}, {2, {1, 0}}};
    const VirtualCoordinate cur{0, 0}, dest{10, 0};
    CHECK(inertia_step(st, cur, dest, candidates(nb), 1.0)->next == 2);
    CHECK(inertia_step(st, cur, dest, candidates(nb), 0.0)->next == 1);
  }
  SUBCASE("sole eligible neighbor is taken even when it moves away") {
    const std::vector<std::pair<NodeId, VirtualCoordinate>> nb{{5, {-1, 0}}};
    const auto c = inertia_step({}, VirtualCoordinate{0, 0}, VirtualCoordinate{10, 0},
                                candidates(nb), 0.5);
    REQUIRE(c);
    CHECK(c->next == 5);
  }
  SUBCASE("previous node is excluded") {
    RoutingState st;
    st.previous = 3;
    const std::vector<std::pair<NodeId, VirtualCoordinate>> nb{{3, {1, 0}}, {4, {-1, 0}}};
    const VirtualCoordinate cur{0, 0}, dest{10, 0};
    CHECK(inertia_step(st, cur, dest, candidates(nb), 0.5)->next == 4);
    const std::vector<std::pair<NodeId, VirtualCoordinate>> only{{3, {1, 0}}};
    CHECK_FALSE(inertia_step(st, cur, dest, candidates(only), 0.5).has_value());
  }
  SUBCASE("opposite heading cancels and falls back to the destination direction") {
    RoutingState st;
    st.heading = std::vector<double>{-1, 0};
    const std::vector<std::pair<NodeId, VirtualCoordinate>> nb{{1, {0, 1}}, {2, {1, 0}}};
    CHECK(inertia_step(st, VirtualCoordinate{0, 0}, VirtualCoordinate{5, 0}, candidates(nb), 0.5)
              ->next == 2);
  }
  SUBCASE("near-equal cosines go to the lower id") {
    const std::vector<std::pair<NodeId, VirtualCoordinate>> nb{{8, {1, 1e-14}}, {6, {1, 0}}};
    CHECK(inertia_step({}, VirtualCoordinate{0, 0}, VirtualCoordinate{1, 0}, candidates(nb), 0.5)
              ->next == 6);
  }
  SUBCASE("argument checks") {
    const std::vector<std::pair<NodeId, VirtualCoordinate>> nb{{1, {1, 0}}};
    CHECK_THROWS_AS(inertia_step({}, VirtualCoordinate{0, 0}, VirtualCoordinate{1, 0},
                                 candidates(nb), 1.5),
                    ArgumentError);
    CHECK_THROWS_AS(inertia_step({}, VirtualCoordinate{0, 0}, VirtualCoordinate{1},
                                 candidates(nb), 0.5),
                    ArgumentError);
  }
}

TEST_CASE("route: trivial cases") {
  const auto t = place_infinite_ne_anchors(fixtures::path_graph(3));
  const auto sys = build_system(t, DistanceMode::Exact);
  for (const Space &space : {Space{Classical2D{}}, Space{MultiDim{}}})
    for (const Algorithm &algo : {Algorithm{Greedy{}}, Algorithm{Inertia{0.5}}}) {
      const RoutingPolicy p{algo, space, 10};
      const auto self = route(t, &sys, p, 1, 1);
      CHECK(self.delivered());
      CHECK(self.path == std::vector<NodeId>{1});
      CHECK(self.hops() == 0);
      CHECK(self.scalar_ops == 0);
      const auto full = route(t, &sys, p, 0, 2);
      CHECK(full.delivered());
      CHECK(full.path == std::vector<NodeId>{0, 1, 2});
    }
}

TEST_CASE("route: argument errors") {
  const auto t = place_boundary_anchors(fixtures::path_graph(3), 4);
  const auto sys = build_system(t, DistanceMode::Exact);
  CHECK_THROWS_AS(route(t, &sys, {}, 0, 3), ArgumentError);
  CHECK_THROWS_AS(route(t, nullptr, {Greedy{}, MultiDim{}, 5}, 0, 2), ArgumentError);
  CHECK_THROWS_AS(route(t, &sys, {Inertia{-0.1}, Classical2D{}, 5}, 0, 2), ArgumentError);
  CHECK_THROWS_AS(route(t, &sys, {Greedy{}, Classical2D{}, 0}, 0, 2), ArgumentError);
  CHECK_THROWS_AS(
      route(t, &sys, {Greedy{}, MultiDim{Norm::L2, false, std::vector<std::size_t>{4}}, 5}, 0, 2),
      ArgumentError);
  CHECK_THROWS_AS(
      route(t, &sys, {Greedy{}, MultiDim{Norm::L2, false, std::vector<std::size_t>{1, 1}}, 5}, 0,
            2),
      ArgumentError);
  CHECK_NOTHROW(route(t, nullptr, {Greedy{}, Classical2D{}, 5}, 0, 2));
}

TEST_CASE("route: ttl bound") {
  const auto t = fixtures::path_graph(6);
  const auto o = route(t, nullptr, {Greedy{}, Classical2D{}, 3}, 0, 5);
  CHECK(o.status == RouteStatus::DroppedTtl);
  CHECK(o.path == std::vector<NodeId>{0, 1, 2, 3});
}

TEST_CASE("route: U-shaped obstacle traps greedy, inertia slides around it") {
  const auto fx = fixtures::u_shape();
  const auto &t = fx.topology;
  const auto ttl = static_cast<std::uint32_t>(4 * t.size());
  const auto greedy = route(t, nullptr, {Greedy{}, Classical2D{}, ttl}, fx.source, fx.destination);
  CHECK(greedy.status == RouteStatus::DroppedLocalMinimum);
  // Straight up the source column until the wall: (10, 2) -> (10, 11).
  CHECK(greedy.hops() == 9);
  CHECK(t.position(greedy.path.back()) == Point2D{10, 11});
  const auto inertia =
      route(t, nullptr, {Inertia{0.5}, Classical2D{}, ttl}, fx.source, fx.destination);
  CHECK(inertia.status == RouteStatus::Delivered);
  CHECK(inertia.hops() == 22);
  CHECK(oracle::validate_trace(t, nullptr, {Inertia{0.5}, Classical2D{}, ttl}, fx.source,
                               fx.destination, ttl, inertia) == "");
}

TEST_CASE("route: anchor in the middle needs the filter") {
  const auto fx = fixtures::anchor_in_the_middle();
  const auto sys = build_system(fx.topology, DistanceMode::Exact);
  const RoutingPolicy plain{Greedy{}, MultiDim{Norm::L2, false, {}}, 100};
  const RoutingPolicy filtered{Greedy{}, MultiDim{Norm::L2, true, {}}, 100};
  const auto a = route(fx.topology, &sys, plain, fx.x, fx.y);
  const auto b = route(fx.topology, &sys, filtered, fx.x, fx.y);
  CHECK(a.status == RouteStatus::DroppedLocalMinimum);
  CHECK(fx.topology.position(a.path[1]).x < 0.0); // first hop moves away from Y
  CHECK(b.status == RouteStatus::Delivered);
  CHECK(b.hops() == 6);
}

TEST_CASE("route: hop-count delivery is decided by node id") {
  // Single anchor hosted at the middle node: nodes 1 and 3 share coordinate 1.
  const auto t = fixtures::path_graph(5).with_anchors({PositionedAnchor{{2, 0}, NodeId{2}}});
  const auto sys = build_system(t, DistanceMode::HopCount);
  CHECK(sys.at(1) == sys.at(3));
  const auto o = route(t, &sys, {Greedy{}, MultiDim{}, 20}, 0, 3);
  CHECK(o.status == RouteStatus::DroppedLocalMinimum);
  CHECK(o.path == std::vector<NodeId>{0, 1});
}

TEST_CASE("route: UNREACHABLE anchors are left out of the decision") {
  // Anchor 1 sits in a separate component.
  const auto t = Topology::from_positions({{0, 0}, {1, 0}, {2, 0}, {9, 9}}, 10, 1.0)
                     .with_anchors({PositionedAnchor{{0, 0}, NodeId{0}},
                                    PositionedAnchor{{9, 9}, NodeId{3}}});
  const auto sys = build_system(t, DistanceMode::HopCount);
  CHECK(base_indices(sys, MultiDim{}, 2, 0) == std::vector<std::size_t>{0});
  const auto o = route(t, &sys, {Greedy{}, MultiDim{}, 20}, 2, 0);
  CHECK(o.delivered());
  CHECK(o.path == std::vector<NodeId>{2, 1, 0});
}

TEST_CASE("infinite-anchor equivalence over randomized suites") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto base = generate_uniform(400, 1.0, 0.09,
                                       seed % 3 ? std::vector<Obstacle>{{{0.5, 0.5}, 0.15}}
                                                : std::vector<Obstacle>{},
                                       1000 + seed);
    const auto hops = all_pairs_hops(base);
    const auto pairs = sample_pairs(hops, 40, seed);
    for (double offset : {0.0, 10.0}) {
      const auto t = place_infinite_ne_anchors(base, offset);
      const auto sys = build_system(t, DistanceMode::Exact);
      for (const Algorithm &algo :
           {Algorithm{Greedy{}}, Algorithm{Inertia{0.0}}, Algorithm{Inertia{0.25}},
            Algorithm{Inertia{0.5}}, Algorithm{Inertia{0.75}}, Algorithm{Inertia{1.0}}}) {
        const RoutingPolicy flat{algo, Classical2D{}, 400};
        const RoutingPolicy nd{algo, MultiDim{}, 400};
        for (const auto &[s, d] : pairs) {
          const auto a = route(t, nullptr, flat, s, d);
          const auto b = route(t, &sys, nd, s, d);
          CHECK(a.path == b.path);
          CHECK(a.status == b.status);
          CHECK(a.scalar_ops == b.scalar_ops);
        }
      }
    }
  }
}

TEST_CASE("path validity and greedy monotonicity across spaces") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto base = generate_uniform(300, 1.0, 0.1, {{{0.4, 0.6}, 0.12}}, 50 + seed);
    const auto hops = all_pairs_hops(base);
    const auto pairs = sample_pairs(hops, 40, seed);
    for (auto mode : {DistanceMode::Exact, DistanceMode::HopCount}) {
      const auto t = seed % 2 ? place_random_anchors(base, 8, seed) : place_boundary_anchors(base, 6);
      const auto sys = build_system(t, mode);
      std::vector<RoutingPolicy> policies;
      for (const Algorithm &algo : {Algorithm{Greedy{}}, Algorithm{Inertia{0.5}}}) {
        policies.push_back({algo, Classical2D{}, 300});
        for (auto norm : {Norm::L2, Norm::L1, Norm::LInf}) {
          policies.push_back({algo, MultiDim{norm, false, {}}, 300});
          policies.push_back({algo, MultiDim{norm, true, {}}, 300});
        }
        policies.push_back({algo, MultiDim{Norm::L2, true, std::vector<std::size_t>{3, 0, 1}}, 300});
      }
      for (const auto &p : policies)
        for (const auto &[s, d] : pairs) {
          const auto o = route(t, &sys, p, s, d);
          const auto why = oracle::validate_trace(t, &sys, p, s, d, p.ttl, o);
          CHECK_MESSAGE(why.empty(), describe(p) << ": " << why);
          CHECK(o == route(t, &sys, p, s, d));
        }
    }
  }
}

TEST_CASE("scalar operation counter follows the cost model") {
  const auto base = generate_uniform(500, 1.0, 0.08, {}, 9);
  const auto hops = all_pairs_hops(base);
  const auto pairs = sample_pairs(hops, 30, 9);
  for (std::size_t k : {2u, 4u, 10u}) {
    const auto t = place_boundary_anchors(base, k);
    const auto sys = build_system(t, DistanceMode::Exact);
    for (const Algorithm &algo : {Algorithm{Greedy{}}, Algorithm{Inertia{0.5}}}) {
      const RoutingPolicy p{algo, MultiDim{}, 200};
      for (const auto &[s, d] : pairs) {
        const auto o = route(t, &sys, p, s, d);
        CHECK(o.scalar_ops == oracle::predicted_scalar_ops(t, p, o, k));
        CHECK(o.scalar_ops == k * o.vector_ops);
      }
    }
  }
  // Classical routing is the two-dimensional instance of the same model.
  const RoutingPolicy flat{Greedy{}, Classical2D{}, 200};
  for (const auto &[s, d] : pairs) {
    const auto o = route(base, nullptr, flat, s, d);
    CHECK(o.scalar_ops == oracle::predicted_scalar_ops(base, flat, o, 2));
  }
}

TEST_CASE("filtered routing always decides over at least one coordinate") {
  const auto t = place_random_anchors(generate_uniform(300, 1.0, 0.1, {}, 3), 10, 3);
  const auto sys = build_system(t, DistanceMode::Exact);
  const auto pairs = sample_pairs(all_pairs_hops(t), 50, 3);
  const RoutingPolicy p{Greedy{}, MultiDim{Norm::L2, true, {}}, 300};
  for (const auto &[s, d] : pairs) {
    const auto o = route(t, &sys, p, s, d);
    for (std::size_t i = 0; i + 1 < o.path.size(); ++i)
      CHECK_FALSE(oracle::hop_indices(sys, std::get<MultiDim>(p.space), o.path[i], s, d).empty());
  }
}

TEST_CASE("route_batch: serial and parallel agree") {
  const auto t = place_boundary_anchors(generate_uniform(400, 1.0, 0.09, {}, 21), 6);
  const auto sys = build_system(t, DistanceMode::Exact);
  const auto pairs = sample_pairs(all_pairs_hops(t), 80, 2);
  for (const RoutingPolicy &p :
       {RoutingPolicy{Greedy{}, MultiDim{}, 300}, RoutingPolicy{Inertia{0.3}, Classical2D{}, 300}}) {
    CHECK(route_batch(t, &sys, p, pairs, Execution::Serial) ==
          route_batch(t, &sys, p, pairs, Execution::Parallel));
  }
  CHECK_THROWS_AS(route_batch(t, &sys, {Greedy{}, MultiDim{}, 10},
                              std::vector<NodePair>{{0, 999}}, Execution::Parallel),
                  ArgumentError);
}

TEST_CASE("describe") {
  CHECK(describe({Greedy{}, Classical2D{}, 1}) == "greedy/2d");
  CHECK(describe({Inertia{0.5}, MultiDim{}, 1}) == "inertia(0.5)/nd");
  CHECK(describe({Greedy{}, MultiDim{Norm::L1, true, std::vector<std::size_t>{0, 1}}, 1}) ==
        "greedy/nd/l1/filter/subset2");
}
