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

#include "uniqtree/unitree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace uniqtree {

std::size_t UniquenessTree::entry_count() const noexcept {
  std::size_t total = 0;
  for (const auto& level : levels) total += level.size();
  return total;
}

namespace {

// unique[k] is set iff level[k].vertex occurs exactly once in `level`.
void mark_unique_counting(const std::vector<TreeEntry>& level,
                          std::vector<std::uint32_t>& scratch,
                          std::vector<bool>& unique) {
  for (const TreeEntry& e : level) ++scratch[e.vertex];
  for (std::size_t k = 0; k < level.size(); ++k) {
    unique[k] = scratch[level[k].vertex] == 1;
  }
  for (const TreeEntry& e : level) scratch[e.vertex] = 0;
}

void mark_unique_pairwise(const std::vector<TreeEntry>& level,
                          std::vector<bool>& unique) {
  for (std::size_t k = 0; k < level.size(); ++k) {
    const Vertex x = level[k].vertex;
    std::size_t same = 0;
    for (const TreeEntry& other : level) same += other.vertex == x;
    unique[k] = same == 1;
  }
}

}  // namespace

UniquenessTree build_uniqueness_tree(const Graph& g, Vertex root,
                                     std::size_t height_cap,
                                     UniquenessScan scan) {
  if (root >= g.order()) {
    throw std::out_of_range("root " + std::to_string(root) +
                            " out of range for graph of order " +
                            std::to_string(g.order()));
  }
  if (height_cap == 0) {
    throw std::invalid_argument("height cap must be at least 1");
  }

  UniquenessTree tree;
  tree.root = root;
  tree.levels.push_back({TreeEntry{root, 0}});

  std::vector<std::uint32_t> scratch(
      scan == UniquenessScan::counting ? g.order() : 0, 0);
  std::vector<bool> unique;

  while (tree.height() < height_cap) {
    auto& current = tree.levels.back();
    unique.assign(current.size(), false);
    if (scan == UniquenessScan::counting) {
      mark_unique_counting(current, scratch, unique);
    } else {
      mark_unique_pairwise(current, unique);
    }

    std::vector<TreeEntry> next;
    for (std::size_t k = 0; k < current.size(); ++k) {
      if (!unique[k]) continue;
      const auto adjacent = g.neighbors(current[k].vertex);
      current[k].child_count = static_cast<std::uint32_t>(adjacent.size());
      for (Vertex w : adjacent) next.push_back({w, 0});
    }
    if (next.empty()) break;
    tree.levels.push_back(std::move(next));
  }
  return tree;
}

UniquenessTree build_uniqueness_tree(const Graph& g, Vertex root) {
  return build_uniqueness_tree(g, root, std::max<std::size_t>(g.order(), 1));
}

std::vector<UniquenessTree> build_all_trees(const Graph& g,
                                            UniquenessScan scan) {
  std::vector<UniquenessTree> trees;
  trees.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    trees.push_back(build_uniqueness_tree(g, v, g.order(), scan));
  }
  return trees;
}

TreeProfile tree_profile(const UniquenessTree& t, std::size_t vertex_count) {
  TreeProfile p;
  p.height = t.height();
  p.widths.reserve(t.levels.size());
  p.child_histograms.reserve(t.levels.size());
  const std::size_t buckets = std::max<std::size_t>(vertex_count, 1);
  for (const auto& level : t.levels) {
    p.widths.push_back(level.size());
    std::vector<std::uint32_t> histogram(buckets, 0);
    for (const TreeEntry& e : level) {
      if (e.child_count >= buckets) {
        throw std::invalid_argument(
            "child count exceeds vertex_count - 1; wrong vertex_count?");
      }
      ++histogram[e.child_count];
    }
    p.child_histograms.push_back(std::move(histogram));
  }
  return p;
}

std::string dump_tree(const UniquenessTree& t) {
  std::ostringstream out;
  out << "height " << t.height() << '\n';
  for (const auto& level : t.levels) {
    for (std::size_t k = 0; k < level.size(); ++k) {
      if (k > 0) out << ' ';
      out << level[k].vertex << ':' << level[k].child_count;
    }
    out << '\n';
  }
  return out.str();
}

std::string dump_profile(const TreeProfile& p) {
  std::ostringstream out;
  out << "widths";
  for (std::size_t w : p.widths) out << ' ' << w;
  out << '\n';
  for (std::size_t k = 0; k < p.child_histograms.size(); ++k) {
    out << "histogram " << k;
    const auto& histogram = p.child_histograms[k];
    for (std::size_t c = 0; c < histogram.size(); ++c) {
      if (histogram[c] != 0) out << ' ' << c << ':' << histogram[c];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace uniqtree
