// Copyright 2026 The uniqtree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uniqtree/probe.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "uniqtree/fixtures.hpp"
#include "uniqtree/gen.hpp"

namespace uniqtree {

std::vector<NeighborhoodShape> neighborhood_shapes(const Graph& g) {
  std::vector<NeighborhoodShape> shapes;
  shapes.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nbrs = g.neighbors(v);
    NeighborhoodShape s;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!g.has_edge(nbrs[i], nbrs[j])) continue;
        ++s.edges;
        for (std::size_t k = j + 1; k < nbrs.size(); ++k) {
          if (g.has_edge(nbrs[i], nbrs[k]) && g.has_edge(nbrs[j], nbrs[k])) {
            ++s.triangles;
          }
        }
      }
    }
    shapes.push_back(s);
  }
  std::sort(shapes.begin(), shapes.end());
  return shapes;
}

ProbeReport run_probe(std::uint64_t seed) {
  const Graph rook = fixtures::rook_4x4();
  const Graph shrikhande = fixtures::shrikhande();

  ProbeReport report;
  report.first_name = "rook 4x4";
  report.second_name = "shrikhande";
  report.order = rook.order();
  report.edges = rook.edge_count();
  report.first_shapes = neighborhood_shapes(rook);
  report.second_shapes = neighborhood_shapes(shrikhande);
  report.certified_non_isomorphic = report.first_shapes != report.second_shapes;
  report.profile_verdict =
      match_graphs(rook, shrikhande, MatchMode::profile).verdict;
  report.canonical_verdict =
      match_graphs(rook, shrikhande, MatchMode::canonical).verdict;

  report.seed = seed;
  const Graph relabeled = isomorphic_pair(rook, seed).graph;
  report.self_profile_verdict =
      match_graphs(rook, relabeled, MatchMode::profile).verdict;
  report.self_canonical_verdict =
      match_graphs(rook, relabeled, MatchMode::canonical).verdict;
  return report;
}

namespace {

std::string summarize(const std::vector<NeighborhoodShape>& shapes) {
  std::map<NeighborhoodShape, std::size_t> counts;
  for (const auto& s : shapes) ++counts[s];
  std::ostringstream out;
  bool first = true;
  for (const auto& [shape, count] : counts) {
    if (!first) out << ", ";
    first = false;
    out << count << " x (" << shape.edges << " edges, " << shape.triangles
        << " triangles)";
  }
  return out.str();
}

}  // namespace

std::string render_probe_report(const ProbeReport& r) {
  std::ostringstream out;
  out << "probe: " << r.first_name << " vs " << r.second_name << " (n = "
      << r.order << ", m = " << r.edges << ")\n";
  out << "neighborhoods " << r.first_name << ": "
      << summarize(r.first_shapes) << '\n';
  out << "neighborhoods " << r.second_name << ": "
      << summarize(r.second_shapes) << '\n';
  out << "local-structure check: "
      << (r.certified_non_isomorphic
              ? "non-isomorphic (neighborhood structure differs)"
              : "undecided (neighborhood structure agrees)")
      << '\n';
  out << "algorithm verdict (profile): " << to_string(r.profile_verdict)
      << '\n';
  out << "algorithm verdict (canonical): " << to_string(r.canonical_verdict)
      << '\n';
  out << "self-pair " << r.first_name << " vs relabeled (seed " << r.seed
      << "): profile " << to_string(r.self_profile_verdict) << ", canonical "
      << to_string(r.self_canonical_verdict) << '\n';
  if (r.counterexample()) {
    out << "counterexample: a certified non-isomorphic pair was declared "
           "isomorphic\n";
  } else if (r.certified_non_isomorphic) {
    out << "no counterexample: both modes separate the pair\n";
  }
  return out.str();
}

}  // namespace uniqtree
