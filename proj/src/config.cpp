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

#include "anchorspace/config.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>

#include <json.hpp>

#include "anchorspace/error.hpp"

namespace anchorspace {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string &path, const std::string &msg) {
  throw ConfigError(path + ": " + msg);
}

void allow_keys(const json &obj, const std::string &path,
                std::initializer_list<const char *> keys) {
  if (!obj.is_object())
    fail(path, "expected an object");
  for (const auto &[key, _] : obj.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char *k) { return key == k; }))
      fail(path + "." + key, "unknown key");
}

double get_real(const json &v, const std::string &path) {
  if (!v.is_number())
    fail(path, "expected a number");
  return v.get<double>();
}

std::uint64_t get_u64(const json &v, const std::string &path) {
  if (v.is_number_unsigned())
    return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  fail(path, "expected a nonnegative integer");
}

std::string get_string(const json &v, const std::string &path) {
  if (!v.is_string())
    fail(path, "expected a string");
  return v.get<std::string>();
}

bool get_bool(const json &v, const std::string &path) {
  if (!v.is_boolean())
    fail(path, "expected true or false");
  return v.get<bool>();
}

Point2D get_point(const json &v, const std::string &path) {
  if (!v.is_array() || v.size() != 2)
    fail(path, "expected [x, y]");
  return {get_real(v[0], path + "[0]"), get_real(v[1], path + "[1]")};
}

DistanceMode parse_mode(const json &v, const std::string &path) {
  const auto s = get_string(v, path);
  if (s == "exact")
    return DistanceMode::Exact;
  if (s == "hop")
    return DistanceMode::HopCount;
  fail(path, "expected \"exact\" or \"hop\", got \"" + s + "\"");
}

Norm parse_norm(const json &v, const std::string &path) {
  const auto s = get_string(v, path);
  if (s == "l2")
    return Norm::L2;
  if (s == "l1")
    return Norm::L1;
  if (s == "linf")
    return Norm::LInf;
  fail(path, "expected \"l2\", \"l1\" or \"linf\", got \"" + s + "\"");
}

TopologyParams parse_topology(const json &j, const std::string &path) {
  allow_keys(j, path, {"nodes", "side", "radius", "seed", "obstacles"});
  TopologyParams t;
  if (j.contains("nodes"))
    t.nodes = get_u64(j["nodes"], path + ".nodes");
  if (j.contains("side"))
    t.side = get_real(j["side"], path + ".side");
  if (j.contains("radius"))
    t.radius = get_real(j["radius"], path + ".radius");
  if (j.contains("seed"))
    t.seed = get_u64(j["seed"], path + ".seed");
  if (j.contains("obstacles")) {
    const auto &arr = j["obstacles"];
    if (!arr.is_array())
      fail(path + ".obstacles", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = path + ".obstacles[" + std::to_string(i) + "]";
      allow_keys(arr[i], p, {"x", "y", "r"});
      for (const char *k : {"x", "y", "r"})
        if (!arr[i].contains(k))
          fail(p + "." + k, "missing");
      Obstacle o{{get_real(arr[i]["x"], p + ".x"), get_real(arr[i]["y"], p + ".y")},
                 get_real(arr[i]["r"], p + ".r")};
      if (!(o.radius > 0.0))
        fail(p + ".r", "must be positive");
      t.obstacles.push_back(o);
    }
  }
  return t;
}

std::size_t parse_k(const json &j, const std::string &path) {
  if (!j.contains("k"))
    fail(path + ".k", "missing");
  const auto k = get_u64(j["k"], path + ".k");
  if (k < kMinAnchors || k > kMaxAnchors)
    fail(path + ".k", "must lie in [2, 64], got " + std::to_string(k));
  return k;
}

AnchorPlacement parse_anchors(const json &j, const std::string &path) {
  if (!j.is_object())
    fail(path, "expected an object");
  if (!j.contains("placement"))
    fail(path + ".placement", "missing");
  const auto kind = get_string(j["placement"], path + ".placement");
  if (kind == "boundary") {
    allow_keys(j, path, {"placement", "k"});
    return BoundaryPlacement{parse_k(j, path)};
  }
  if (kind == "random") {
    allow_keys(j, path, {"placement", "k", "seed"});
    RandomPlacement r{parse_k(j, path), std::nullopt};
    if (j.contains("seed"))
      r.seed = get_u64(j["seed"], path + ".seed");
    return r;
  }
  if (kind == "external") {
    allow_keys(j, path, {"placement", "points"});
    if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
      fail(path + ".points", "expected a non-empty array of [x, y]");
    ExternalPlacement e;
    for (std::size_t i = 0; i < j["points"].size(); ++i)
      e.points.push_back(get_point(j["points"][i], path + ".points[" + std::to_string(i) + "]"));
    if (e.points.size() > kMaxAnchors)
      fail(path + ".points", "at most 64 anchors");
    return e;
  }
  if (kind == "infinite_ne") {
    allow_keys(j, path, {"placement", "offset"});
    InfiniteNePlacement p;
    if (j.contains("offset"))
      p.offset = get_real(j["offset"], path + ".offset");
    return p;
  }
  fail(path + ".placement", "expected boundary, random, external or infinite_ne, got \"" +
                                kind + "\"");
}

PolicySpec parse_policy(const json &j, const std::string &path) {
  allow_keys(j, path, {"name", "algorithm", "lambda", "space", "norm", "filter", "subset"});
  PolicySpec spec;
  if (j.contains("name"))
    spec.name = get_string(j["name"], path + ".name");
  const std::string algo =
      j.contains("algorithm") ? get_string(j["algorithm"], path + ".algorithm") : "greedy";
  if (algo == "greedy") {
    if (j.contains("lambda"))
      fail(path + ".lambda", "only applies to the inertia algorithm");
    spec.policy.algorithm = Greedy{};
  } else if (algo == "inertia") {
    Inertia in;
    if (j.contains("lambda"))
      in.lambda = get_real(j["lambda"], path + ".lambda");
    if (!(in.lambda >= 0.0 && in.lambda <= 1.0))
      fail(path + ".lambda", "must lie in [0, 1]");
    spec.policy.algorithm = in;
  } else {
    fail(path + ".algorithm", "expected \"greedy\" or \"inertia\", got \"" + algo + "\"");
  }

  const std::string space = j.contains("space") ? get_string(j["space"], path + ".space") : "nd";
  if (space == "2d") {
    for (const char *k : {"norm", "filter", "subset"})
      if (j.contains(k))
        fail(path + "." + k, "only applies to space \"nd\"");
    spec.policy.space = Classical2D{};
  } else if (space == "nd") {
    MultiDim md;
    if (j.contains("norm"))
      md.norm = parse_norm(j["norm"], path + ".norm");
    if (j.contains("filter"))
      md.filter = get_bool(j["filter"], path + ".filter");
    if (j.contains("subset")) {
      const auto &arr = j["subset"];
      if (!arr.is_array() || arr.empty())
        fail(path + ".subset", "expected a non-empty array of anchor indices");
      md.subset.emplace();
      for (std::size_t i = 0; i < arr.size(); ++i)
        md.subset->push_back(get_u64(arr[i], path + ".subset[" + std::to_string(i) + "]"));
    }
    spec.policy.space = std::move(md);
  } else {
    fail(path + ".space", "expected \"2d\" or \"nd\", got \"" + space + "\"");
  }
  return spec;
}

ScenarioConfig parse_scenario(const json &j, const std::string &path) {
  allow_keys(j, path,
             {"name", "seed", "topology", "anchors", "mode", "policies", "pairs", "pair_seed",
              "ttl", "replications"});
  ScenarioConfig c;
  if (j.contains("name"))
    c.name = get_string(j["name"], path + ".name");
  if (j.contains("seed"))
    c.seed = get_u64(j["seed"], path + ".seed");
  if (j.contains("topology"))
    c.topology = parse_topology(j["topology"], path + ".topology");
  if (j.contains("anchors"))
    c.anchors = parse_anchors(j["anchors"], path + ".anchors");
  if (j.contains("mode"))
    c.mode = parse_mode(j["mode"], path + ".mode");
  if (j.contains("policies")) {
    const auto &arr = j["policies"];
    if (!arr.is_array() || arr.empty())
      fail(path + ".policies", "expected a non-empty array");
    for (std::size_t i = 0; i < arr.size(); ++i)
      c.policies.push_back(parse_policy(arr[i], path + ".policies[" + std::to_string(i) + "]"));
  } else {
    c.policies.push_back(PolicySpec{std::nullopt, RoutingPolicy{Greedy{}, MultiDim{}, 1000}});
  }
  if (j.contains("pairs"))
    c.pairs = get_u64(j["pairs"], path + ".pairs");
  if (j.contains("pair_seed"))
    c.pair_seed = get_u64(j["pair_seed"], path + ".pair_seed");
  if (j.contains("ttl")) {
    const auto ttl = get_u64(j["ttl"], path + ".ttl");
    if (ttl < 1 || ttl > 0xffffffffu)
      fail(path + ".ttl", "must lie in [1, 2^32)");
    c.ttl = static_cast<std::uint32_t>(ttl);
  }
  if (j.contains("replications"))
    c.replications = get_u64(j["replications"], path + ".replications");
  validate(c);
  return c;
}

std::string value_label(const json &v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::vector<ScenarioConfig> expand_grid(const json &doc) {
  allow_keys(doc, "$", {"base", "grid"});
  if (!doc.contains("base"))
    fail("$.base", "missing");
  const json &base = doc["base"];
  const json &grid = doc["grid"];
  allow_keys(grid, "$.grid", {"k", "placement", "mode", "seed"});

  struct Axis {
    std::string key;
    std::vector<json> values;
  };
  std::vector<Axis> axes;
  for (const char *key : {"k", "placement", "mode", "seed"}) {
    if (!grid.contains(key))
      continue;
    const auto &arr = grid[key];
    if (!arr.is_array() || arr.empty())
      fail(std::string("$.grid.") + key, "expected a non-empty array");
    axes.push_back({key, std::vector<json>(arr.begin(), arr.end())});
  }

  std::vector<ScenarioConfig> out;
  std::vector<std::size_t> idx(axes.size(), 0);
  const std::string base_name = base.contains("name") && base["name"].is_string()
                                    ? base["name"].get<std::string>()
                                    : std::string("scenario");
  for (;;) {
    json doc_i = base;
    std::string name = base_name;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      const auto &v = axes[a].values[idx[a]];
      const auto &key = axes[a].key;
      name += "/" + key + "=" + value_label(v);
      if (key == "k") {
        auto &anch = doc_i["anchors"];
        if (!anch.contains("placement"))
          anch["placement"] = "boundary";
        anch["k"] = v;
      } else if (key == "placement") {
        auto &anch = doc_i["anchors"];
        anch["placement"] = v;
        // Keys meaningful for another placement kind do not carry over.
        const auto kind = v.is_string() ? v.get<std::string>() : std::string();
        std::set<std::string> keep{"placement"};
        if (kind == "boundary" || kind == "random")
          keep.insert("k");
        if (kind == "random")
          keep.insert("seed");
        if (kind == "external")
          keep.insert("points");
        if (kind == "infinite_ne")
          keep.insert("offset");
        for (auto it = anch.begin(); it != anch.end();) {
          if (!keep.count(it.key()))
            it = anch.erase(it);
          else
            ++it;
        }
      } else if (key == "mode") {
        doc_i["mode"] = v;
      } else {
        doc_i["seed"] = v;
      }
    }
    doc_i["name"] = name;
    out.push_back(parse_scenario(doc_i, "$.base"));

    bool done = true;
    for (std::size_t a = axes.size(); a-- > 0;) {
      if (++idx[a] < axes[a].values.size()) {
        done = false;
        break;
      }
      idx[a] = 0;
    }
    if (done)
      break;
  }
  return out;
}

void location(std::string_view text, std::size_t byte, std::size_t &line, std::size_t &col) {
  line = 1;
  col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

json policy_json(const PolicySpec &p) {
  json j;
  if (p.name)
    j["name"] = *p.name;
  if (const auto *in = std::get_if<Inertia>(&p.policy.algorithm)) {
    j["algorithm"] = "inertia";
    j["lambda"] = in->lambda;
  } else {
    j["algorithm"] = "greedy";
  }
  if (const auto *md = std::get_if<MultiDim>(&p.policy.space)) {
    j["space"] = "nd";
    j["norm"] = to_string(md->norm);
    j["filter"] = md->filter;
    if (md->subset)
      j["subset"] = *md->subset;
  } else {
    j["space"] = "2d";
  }
  return j;
}

} // namespace

std::vector<ScenarioConfig> parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    std::size_t line = 0, col = 0;
    location(text, e.byte, line, col);
    throw ConfigError("parse error at line " + std::to_string(line) + ", column " +
                      std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object())
    fail("$", "expected a JSON object");
  if (doc.contains("grid"))
    return expand_grid(doc);
  return {parse_scenario(doc, "$")};
}

std::string to_canonical_json(const ScenarioConfig &c) {
  json j;
  j["name"] = c.name;
  j["seed"] = c.seed;
  json topo{{"nodes", c.topology.nodes}, {"side", c.topology.side}, {"radius", c.topology.radius}};
  if (c.topology.seed)
    topo["seed"] = *c.topology.seed;
  json obstacles = json::array();
  for (const auto &o : c.topology.obstacles)
    obstacles.push_back({{"x", o.center.x}, {"y", o.center.y}, {"r", o.radius}});
  topo["obstacles"] = obstacles;
  j["topology"] = topo;

  json anch;
  anch["placement"] = placement_name(c.anchors);
  if (const auto *b = std::get_if<BoundaryPlacement>(&c.anchors)) {
    anch["k"] = b->k;
  } else if (const auto *r = std::get_if<RandomPlacement>(&c.anchors)) {
    anch["k"] = r->k;
    if (r->seed)
      anch["seed"] = *r->seed;
  } else if (const auto *e = std::get_if<ExternalPlacement>(&c.anchors)) {
    json pts = json::array();
    for (const auto &p : e->points)
      pts.push_back({p.x, p.y});
    anch["points"] = pts;
  } else {
    anch["offset"] = std::get<InfiniteNePlacement>(c.anchors).offset;
  }
  j["anchors"] = anch;
  j["mode"] = to_string(c.mode);
  json pols = json::array();
  for (const auto &p : c.policies)
    pols.push_back(policy_json(p));
  j["policies"] = pols;
  j["pairs"] = c.pairs;
  if (c.pair_seed)
    j["pair_seed"] = *c.pair_seed;
  if (c.ttl)
    j["ttl"] = *c.ttl;
  j["replications"] = c.replications;
  return j.dump(2) + "\n";
}

} // namespace anchorspace
