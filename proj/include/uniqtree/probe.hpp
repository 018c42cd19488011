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

#ifndef UNIQTREE_PROBE_HPP_
#define UNIQTREE_PROBE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "uniqtree/compare.hpp"
#include "uniqtree/graph.hpp"

namespace uniqtree {

// Induced subgraph on the neighbors of one vertex, summarized.
struct NeighborhoodShape {
  std::size_t edges = 0;
  std::size_t triangles = 0;

  friend auto operator<=>(const NeighborhoodShape&,
                          const NeighborhoodShape&) = default;
};

// Sorted multiset of neighborhood shapes over all vertices. An isomorphism
// invariant: unequal results certify non-isomorphism.
std::vector<NeighborhoodShape> neighborhood_shapes(const Graph& g);

struct ProbeReport {
  std::string first_name;
  std::string second_name;
  std::size_t order = 0;
  std::size_t edges = 0;
  // Invariant check: true when neighborhood shapes differ.
  bool certified_non_isomorphic = false;
  std::vector<NeighborhoodShape> first_shapes;
  std::vector<NeighborhoodShape> second_shapes;
  Verdict profile_verdict = Verdict::non_isomorphic;
  Verdict canonical_verdict = Verdict::non_isomorphic;
  // First fixture against a random relabeling of itself.
  std::uint64_t seed = 0;
  Verdict self_profile_verdict = Verdict::non_isomorphic;
  Verdict self_canonical_verdict = Verdict::non_isomorphic;

  // A certified non-isomorphic pair declared isomorphic by either mode.
  bool counterexample() const {
    return certified_non_isomorphic &&
           (profile_verdict == Verdict::isomorphic ||
            canonical_verdict == Verdict::isomorphic);
  }
};

// Runs both match modes on the 4x4 rook's graph against the Shrikhande
// graph, plus a relabeled self-pair.
ProbeReport run_probe(std::uint64_t seed = 0);

std::string render_probe_report(const ProbeReport& report);

}  // namespace uniqtree

#endif  // UNIQTREE_PROBE_HPP_
