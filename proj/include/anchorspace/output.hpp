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

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "anchorspace/harness.hpp"
#include "anchorspace/topology.hpp"

namespace anchorspace {

/// Standalone SVG of one message: nodes as circles, obstacles as shaded
/// disks, anchors as red squares (arrows for directional anchors), the path
/// as a polyline with one point per visited node.
std::string render_trace_svg(const Topology &topology, std::span<const NodeId> path);

/// Writes `results.csv` into `dir` (created if needed). With `traces`, also
/// writes `traces.csv` and one SVG per replication-0 message under
/// `dir/svg/`. Returns the files written, in write order. Throws Error with
/// the offending path on I/O failure.
std::vector<std::filesystem::path> emit_outputs(const std::vector<RunReport> &reports,
                                                const std::filesystem::path &dir,
                                                bool traces);

} // namespace anchorspace
