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

#include "anchorspace/output.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "anchorspace/error.hpp"
#include "anchorspace/format.hpp"

namespace anchorspace {

namespace {

std::string sanitize(const std::string &s) {
  std::string out;
  for (char c : s) {
    const bool plain = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                       (c >= '0' && c <= '9') || c == '-' || c == '.';
    out += plain ? c : '_';
  }
  return out;
}

void write_file(const std::filesystem::path &p, const std::string &content,
                std::vector<std::filesystem::path> &manifest) {
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  if (!f)
    throw Error("cannot open " + p.string() + " for writing");
  f << content;
  f.close();
  if (!f)
    throw Error("failed writing " + p.string());
  manifest.push_back(p);
}

} // namespace

std::string render_trace_svg(const Topology &topology, std::span<const NodeId> path) {
  double minx = 0.0, miny = 0.0, maxx = topology.side(), maxy = topology.side();
  auto grow = [&](Point2D p) {
    minx = std::min(minx, p.x);
    miny = std::min(miny, p.y);
    maxx = std::max(maxx, p.x);
    maxy = std::max(maxy, p.y);
  };
  for (const auto &p : topology.positions())
    grow(p);
  for (const auto &a : topology.anchors())
    if (const auto *pa = std::get_if<PositionedAnchor>(&a))
      grow(pa->point);
  const double span = std::max(maxx - minx, maxy - miny);
  const double margin = 0.05 * span;
  minx -= margin;
  miny -= margin;
  maxx += margin;
  maxy += margin;
  const double unit = span / 200.0;
  // Flip y so that north is up.
  auto X = [&](double x) { return format_real(x - minx); };
  auto Y = [&](double y) { return format_real(maxy - y); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 "
     << format_real(maxx - minx) << ' ' << format_real(maxy - miny) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g class=\"obstacles\" fill=\"#cccccc\">\n";
  for (const auto &o : topology.obstacles())
    os << "<circle cx=\"" << X(o.center.x) << "\" cy=\"" << Y(o.center.y) << "\" r=\""
       << format_real(o.radius) << "\"/>\n";
  os << "</g>\n<g class=\"edges\" stroke=\"#e0e0e0\" stroke-width=\"" << format_real(unit * 0.3)
     << "\">\n";
  for (NodeId u = 0; u < topology.size(); ++u)
    for (NodeId v : topology.neighbors(u))
      if (u < v) {
        const auto a = topology.position(u), b = topology.position(v);
        os << "<line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x)
           << "\" y2=\"" << Y(b.y) << "\"/>\n";
      }
  os << "</g>\n<g class=\"nodes\" fill=\"#555555\">\n";
  for (const auto &p : topology.positions())
    os << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"" << format_real(unit)
       << "\"/>\n";
  os << "</g>\n<g class=\"anchors\" fill=\"#d62728\">\n";
  for (const auto &a : topology.anchors()) {
    if (const auto *pa = std::get_if<PositionedAnchor>(&a)) {
      os << "<rect x=\"" << X(pa->point.x - 2 * unit) << "\" y=\"" << Y(pa->point.y + 2 * unit)
         << "\" width=\"" << format_real(4 * unit) << "\" height=\"" << format_real(4 * unit)
         << "\"/>\n";
    } else {
      // Arrow on the border pointing toward the anchor at infinity.
      const auto &d = std::get<DirectionalAnchor>(a).direction;
      const double cx = (minx + maxx) / 2, cy = (miny + maxy) / 2;
      const double r = (maxx - minx) / 2 - 3 * unit;
      const Point2D tip{cx + d.x * r, cy + d.y * r};
      const Point2D back{tip.x - d.x * 6 * unit, tip.y - d.y * 6 * unit};
      const Point2D side{-d.y * 3 * unit, d.x * 3 * unit};
      os << "<polygon class=\"directional\" points=\"" << X(tip.x) << ',' << Y(tip.y) << ' '
         << X(back.x + side.x) << ',' << Y(back.y + side.y) << ' ' << X(back.x - side.x)
         << ',' << Y(back.y - side.y) << "\"/>\n";
    }
  }
  os << "</g>\n";
  os << "<polyline class=\"path\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\""
     << format_real(unit * 0.8) << "\" points=\"";
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto p = topology.position(path[i]);
    os << (i ? " " : "") << X(p.x) << ',' << Y(p.y);
  }
  os << "\"/>\n";
  if (!path.empty()) {
    const auto s = topology.position(path.front());
    os << "<circle class=\"source\" cx=\"" << X(s.x) << "\" cy=\"" << Y(s.y) << "\" r=\""
       << format_real(2.5 * unit) << "\" fill=\"#2ca02c\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<std::filesystem::path> emit_outputs(const std::vector<RunReport> &reports,
                                                const std::filesystem::path &dir, bool traces) {
  std::vector<std::filesystem::path> manifest;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw Error("cannot create output directory " + dir.string() + ": " + ec.message());

  std::ostringstream results;
  write_results_csv(results, reports);
  write_file(dir / "results.csv", results.str(), manifest);
  if (!traces)
    return manifest;

  std::ostringstream trace_csv;
  write_traces_csv(trace_csv, reports);
  write_file(dir / "traces.csv", trace_csv.str(), manifest);

  const auto svg_dir = dir / "svg";
  std::filesystem::create_directories(svg_dir, ec);
  if (ec)
    throw Error("cannot create output directory " + svg_dir.string() + ": " + ec.message());
  for (const auto &r : reports) {
    std::optional<Topology> topo;
    for (const auto &p : r.policies) {
      std::size_t index = 0;
      for (const auto &t : p.traces) {
        if (t.replication != 0)
          continue;
        if (!topo)
          topo = build_topology(r.config, 0);
        std::ostringstream name;
        name << sanitize(r.scenario) << "__" << sanitize(p.name) << "__" << index++ << '_'
             << t.source << '_' << t.destination << ".svg";
        write_file(svg_dir / name.str(), render_trace_svg(*topo, t.outcome.path), manifest);
      }
    }
  }
  return manifest;
}

} // namespace anchorspace
