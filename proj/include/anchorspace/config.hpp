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

#include <string>
#include <string_view>
#include <vector>

#include "anchorspace/harness.hpp"

namespace anchorspace {

/// Parses a JSON scenario document, or a grid document
/// `{"base": {...}, "grid": {"k": [...], "placement": [...], "mode": [...], "seed": [...]}}`
/// which expands to the cartesian product in the order k, placement, mode,
/// seed (outermost first). Unknown keys are rejected with their path.
/// Throws ConfigError on syntax errors (with line and column) and on
/// validation failures (naming the field).
std::vector<ScenarioConfig> parse_config(std::string_view text);

/// Canonical JSON for one scenario: every field spelled out, so that
/// parse_config(to_canonical_json(c)) == {c}.
std::string to_canonical_json(const ScenarioConfig &config);

} // namespace anchorspace
