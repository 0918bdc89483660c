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

// Batch front end: anchorspace run|grid|trace|coords <config.json> [flags]

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "anchorspace/config.hpp"
#include "anchorspace/error.hpp"
#include "anchorspace/harness.hpp"
#include "anchorspace/output.hpp"

namespace fs = std::filesystem;
using namespace anchorspace;

namespace {

struct Common {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
};

fs::path output_dir(const Common &c) {
  if (!c.out.empty())
    return c.out;
  if (const char *env = std::getenv("ANCHORSPACE_OUT"); env && *env)
    return env;
  return "out";
}

std::vector<ScenarioConfig> load(const Common &c) {
  std::ifstream in(c.config, std::ios::binary);
  if (!in)
    throw Error("cannot read config " + c.config);
  std::stringstream ss;
  ss << in.rdbuf();
  auto configs = parse_config(ss.str());
  if (c.seed)
    for (auto &cfg : configs)
      cfg.seed = *c.seed;
  return configs;
}

int run_configs(const Common &c, bool svg, bool single) {
  const auto configs = load(c);
  if (single && configs.size() != 1)
    throw ConfigError(c.config + " describes a grid; use the grid subcommand");
  const auto entries = run_grid(configs);
  std::vector<RunReport> reports;
  int status = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].ok()) {
      reports.push_back(*entries[i].report);
    } else {
      std::cerr << "error: " << configs[i].name << ": " << entries[i].error << '\n';
      status = 1;
    }
  }
  std::size_t svgs = 0;
  for (const auto &p : emit_outputs(reports, output_dir(c), svg)) {
    if (p.extension() == ".svg")
      ++svgs;
    else
      std::cout << p.string() << '\n';
  }
  if (svgs)
    std::cout << svgs << " svg traces under " << (output_dir(c) / "svg").string() << '\n';
  return status;
}

int trace(const Common &c, NodeId source, NodeId target) {
  const auto configs = load(c);
  if (configs.size() != 1)
    throw ConfigError(c.config + " describes a grid; trace needs a single scenario");
  const auto &cfg = configs.front();
  const auto ctx = prepare_replication(cfg, 0);
  const auto dir = output_dir(c);
  fs::create_directories(dir);
  for (const auto &spec : cfg.policies) {
    RoutingPolicy policy = spec.policy;
    policy.ttl = ctx.ttl;
    const auto outcome =
        route(ctx.topology, ctx.coords ? &*ctx.coords : nullptr, policy, source, target);
    std::cout << spec.label() << ',' << to_string(outcome.status) << ',' << outcome.hops()
              << ',';
    for (std::size_t i = 0; i < outcome.path.size(); ++i)
      std::cout << (i ? " " : "") << outcome.path[i];
    std::cout << '\n';
    std::string stem = "trace_" + spec.label() + "_" + std::to_string(source) + "_" +
                       std::to_string(target);
    for (char &ch : stem)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '.')
        ch = '_';
    const auto file = dir / (stem + ".svg");
    std::ofstream f(file, std::ios::binary);
    f << render_trace_svg(ctx.topology, outcome.path);
    if (!f)
      throw Error("failed writing " + file.string());
    std::cerr << "wrote " << file.string() << '\n';
  }
  return 0;
}

int coords(const Common &c) {
  const auto configs = load(c);
  if (configs.size() != 1)
    throw ConfigError(c.config + " describes a grid; coords needs a single scenario");
  const auto &cfg = configs.front();
  const auto topo = build_topology(cfg, 0);
  const auto sys = build_system(topo, cfg.mode);
  const auto dir = output_dir(c);
  fs::create_directories(dir);
  const auto file = dir / "coordinates.csv";
  std::ofstream f(file, std::ios::binary);
  write_coordinates_csv(f, sys);
  if (!f)
    throw Error("failed writing " + file.string());
  std::cout << file.string() << '\n';
  return 0;
}

void add_common(CLI::App *cmd, Common &c) {
  cmd->add_option("config", c.config, "Scenario or grid JSON document")->required();
  cmd->add_option("--out", c.out, "Output directory (default $ANCHORSPACE_OUT or ./out)");
  cmd->add_option("--seed", c.seed, "Override the master seed of every scenario");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Virtual-coordinate routing experiments"};
  app.require_subcommand(1);

  Common common;
  bool svg = false;
  std::vector<NodeId> pair;

  auto *run = app.add_subcommand("run", "Run one scenario and write results.csv");
  add_common(run, common);
  run->add_flag("--svg", svg, "Also write traces.csv and per-message SVG traces");

  auto *grid = app.add_subcommand("grid", "Run every scenario of a grid document");
  add_common(grid, common);
  grid->add_flag("--svg", svg, "Also write traces.csv and per-message SVG traces");

  auto *tr = app.add_subcommand("trace", "Route one pair under every policy and draw it");
  add_common(tr, common);
  tr->add_option("--pair", pair, "Source and destination node ids")->expected(2)->required();

  auto *co = app.add_subcommand("coords", "Dump the coordinate table of replication 0");
  add_common(co, common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run)
      return run_configs(common, svg, true);
    if (*grid)
      return run_configs(common, svg, false);
    if (*tr)
      return trace(common, pair.at(0), pair.at(1));
    if (*co)
      return coords(common);
  } catch (const ConfigError &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
