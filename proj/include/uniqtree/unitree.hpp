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

#ifndef UNIQTREE_UNITREE_HPP_
#define UNIQTREE_UNITREE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "uniqtree/graph.hpp"

namespace uniqtree {

// One node of a uniqueness tree: the graph vertex it stands for and how many
// children it produced on the next level.
struct TreeEntry {
  Vertex vertex = 0;
  std::uint32_t child_count = 0;

  friend bool operator==(const TreeEntry&, const TreeEntry&) = default;
};

// Rooted uniqueness tree stored level by level.
//
// Level 0 holds the root alone. Level k+1 is the concatenation, in level-k
// order, of the children of every level-k entry whose vertex occurs exactly
// once in level k; each such entry contributes its graph neighbors in
// ascending order. Children of one parent therefore form a contiguous span,
// which is all the structure canonical_tree_code needs.
struct UniquenessTree {
  Vertex root = 0;
  std::vector<std::vector<TreeEntry>> levels;

  std::size_t height() const noexcept {
    return levels.empty() ? 0 : levels.size() - 1;
  }
  std::size_t entry_count() const noexcept;

  friend bool operator==(const UniquenessTree&,
                         const UniquenessTree&) = default;
};

// Summary statistics compared between trees. child_histograms[k][c] is the
// number of level-k entries with exactly c children, for c in 0..n-1.
struct TreeProfile {
  std::size_t height = 0;
  std::vector<std::size_t> widths;
  std::vector<std::vector<std::uint32_t>> child_histograms;

  friend bool operator==(const TreeProfile&, const TreeProfile&) = default;
};

// How build_uniqueness_tree decides whether an entry's vertex occurs once in
// its level. Both strategies produce identical trees.
enum class UniquenessScan {
  // Occurrence counts in an n-sized scratch array; O(width) per level.
  counting,
  // Each entry is compared against the rest of its level until a duplicate
  // turns up; O(width^2) per level in the worst case, the cost model of the
  // complexity bounds.
  pairwise,
};

// Grows the uniqueness tree rooted at `root` until a level has no unique
// entry, the next level would be empty, or the height reaches `height_cap`.
// Throws std::out_of_range for a bad root and std::invalid_argument for a
// zero cap.
UniquenessTree build_uniqueness_tree(
    const Graph& g, Vertex root, std::size_t height_cap,
    UniquenessScan scan = UniquenessScan::counting);

// Same with the default height cap, n = g.order().
UniquenessTree build_uniqueness_tree(const Graph& g, Vertex root);

// build_uniqueness_tree(g, v, n) for every vertex v, in vertex order.
std::vector<UniquenessTree> build_all_trees(
    const Graph& g, UniquenessScan scan = UniquenessScan::counting);

// Height, widths and per-level child-count histograms over counts 0..n-1,
// where n is `vertex_count` (the order of the graph the tree came from).
TreeProfile tree_profile(const UniquenessTree& t, std::size_t vertex_count);

// Text dump used by the CLI:
//
//   height <h>
//   <vertex>:<child_count> ...     (one line per level, level 0 first)
std::string dump_tree(const UniquenessTree& t);

// Text dump of a profile:
//
//   widths <w0> <w1> ...
//   histogram <level> <count>:<entries> ...   (non-zero buckets only)
std::string dump_profile(const TreeProfile& p);

}  // namespace uniqtree

#endif  // UNIQTREE_UNITREE_HPP_
