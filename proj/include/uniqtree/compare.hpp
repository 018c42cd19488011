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

#ifndef UNIQTREE_COMPARE_HPP_
#define UNIQTREE_COMPARE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uniqtree/graph.hpp"
#include "uniqtree/unitree.hpp"

namespace uniqtree {

enum class Verdict { isomorphic, non_isomorphic };

// Signature used to pair vertices of the two graphs.
//   profile   - height, level widths and child-count histograms.
//   canonical - rooted-tree canonical code of the whole uniqueness tree.
enum class MatchMode { profile, canonical };

std::string_view to_string(Verdict v);
std::string_view to_string(MatchMode m);
// Accepts "profile" or "canonical"; throws std::invalid_argument otherwise.
MatchMode parse_match_mode(std::string_view text);

struct MatchResult {
  Verdict verdict = Verdict::non_isomorphic;
  MatchMode mode = MatchMode::profile;
  // Set when the graphs differ in order; mapping is then empty.
  bool size_mismatch = false;
  // mapping[v] is the vertex of h that v of g was paired with, if any.
  std::vector<std::optional<Vertex>> mapping;
};

bool profiles_equal(const TreeProfile& a, const TreeProfile& b);

// Canonical string over {0,1}: a leaf encodes as "01", an internal node as
// "0" + sorted concatenation of its children's codes + "1". Two rooted trees
// are isomorphic iff their codes are equal.
std::string canonical_tree_code(const UniquenessTree& t);

// Builds every uniqueness tree of both graphs, then pairs vertices first-fit:
// for v = 0, 1, ... the first still-unmapped u of h with an equal signature
// is taken. The graphs are declared isomorphic iff every vertex is paired.
// `scan` only changes the cost of tree generation, never the result.
MatchResult match_graphs(const Graph& g, const Graph& h,
                         MatchMode mode = MatchMode::profile,
                         UniquenessScan scan = UniquenessScan::counting);

}  // namespace uniqtree

#endif  // UNIQTREE_COMPARE_HPP_
