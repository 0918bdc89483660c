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

#include "anchorspace/kernels.hpp"
#include "anchorspace/topology.hpp"

using namespace anchorspace;

TEST_CASE("OpenMP kernels reproduce the serial reference") {
  const std::vector<Obstacle> obs{{{0.5, 0.5}, 0.1}, {{0.2, 0.8}, 0.07}};
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto t = place_boundary_anchors(generate_uniform(350, 1.0, 0.1, obs, seed), 9);
    const auto &pos = t.positions();
    CHECK(kernels::serial::build_adjacency(pos, 0.1, obs) ==
          kernels::omp::build_adjacency(pos, 0.1, obs));
    CHECK(kernels::serial::all_pairs_hops(t.adjacency()) ==
          kernels::omp::all_pairs_hops(t.adjacency()));
    const std::vector<NodeId> sources{0, 17, 349, 17};
    CHECK(kernels::serial::multi_bfs(t.adjacency(), sources) ==
          kernels::omp::multi_bfs(t.adjacency(), sources));
    CHECK(kernels::serial::exact_table(pos, t.anchors()) ==
          kernels::omp::exact_table(pos, t.anchors()));
  }
}

TEST_CASE("hop_diameter ignores unreachable entries") {
  const auto t = Topology::from_positions({{0, 0}, {1, 0}, {2, 0}, {9, 9}}, 10, 1.0);
  const auto m = all_pairs_hops(t, Execution::Serial);
  CHECK(hop_diameter(m) == 2);
  CHECK(m.at(0, 3) == kUnreachableHops);
  CHECK(hop_diameter(all_pairs_hops(Topology::from_positions({{0, 0}}, 1, 1))) == 0);
}

TEST_CASE("linked: radius boundary is inclusive, obstacles block") {
  const std::vector<Obstacle> none;
  CHECK(kernels::linked({0, 0}, {1, 0}, 1.0, none));
  CHECK_FALSE(kernels::linked({0, 0}, {1.0000001, 0}, 1.0, none));
  const std::vector<Obstacle> wall{{{0.5, 0.2}, 0.25}};
  CHECK_FALSE(kernels::linked({0, 0}, {1, 0}, 1.0, wall));
  const std::vector<Obstacle> clear{{{0.5, 0.3}, 0.25}};
  CHECK(kernels::linked({0, 0}, {1, 0}, 1.0, clear));
}
