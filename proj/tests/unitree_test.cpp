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

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "test_util.hpp"
#include "uniqtree/fixtures.hpp"
#include "uniqtree/gen.hpp"

namespace uniqtree {
namespace {

using testing::arbitrary_graph;
using testing::complete_graph;

enum : Vertex { A, B, C, D, E, F, G, H };

std::vector<Vertex> vertices_of(const std::vector<TreeEntry>& level) {
  std::vector<Vertex> out;
  for (const auto& e : level) out.push_back(e.vertex);
  return out;
}

std::vector<std::uint32_t> children_of(const std::vector<TreeEntry>& level) {
  std::vector<std::uint32_t> out;
  for (const auto& e : level) out.push_back(e.child_count);
  return out;
}

// Straight transcription of the reference generation loop over fixed-size
// level arrays: pairwise uniqueness test, height bounded by `cap`, trailing
// empty levels dropped afterwards.
UniquenessTree reference_tree(const Graph& g, Vertex root, std::size_t cap) {
  std::vector<std::vector<Vertex>> verts(cap + 2);
  std::vector<std::vector<std::uint32_t>> kids(cap + 2);
  verts[0].push_back(root);
  kids[0].push_back(0);
  std::size_t height = 0;
  std::size_t unique_count = 1;
  while (unique_count > 0 && height < cap) {
    ++height;
    unique_count = 0;
    const auto& prev = verts[height - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      bool unique = true;
      for (std::size_t l = 0; l < prev.size(); ++l) {
        if (k != l && prev[k] == prev[l]) unique = false;
      }
      if (!unique) continue;
      ++unique_count;
      for (Vertex w : g.neighbors(prev[k])) {
        verts[height].push_back(w);
        kids[height].push_back(0);
        ++kids[height - 1][k];
      }
    }
  }
  UniquenessTree t;
  t.root = root;
  for (std::size_t k = 0; k <= height && !verts[k].empty(); ++k) {
    std::vector<TreeEntry> level;
    for (std::size_t i = 0; i < verts[k].size(); ++i) {
      level.push_back({verts[k][i], kids[k][i]});
    }
    t.levels.push_back(std::move(level));
  }
  return t;
}

TEST(BuildUniquenessTree, CubeVertexATerminatesAtHeightTwo) {
  const auto t = build_uniqueness_tree(fixtures::cube(), A);
  ASSERT_EQ(t.height(), 2u);
  EXPECT_EQ(vertices_of(t.levels[0]), std::vector<Vertex>{A});
  EXPECT_EQ(vertices_of(t.levels[1]), (std::vector<Vertex>{B, C, G}));
  EXPECT_EQ(vertices_of(t.levels[2]),
            (std::vector<Vertex>{A, D, H, A, D, E, A, E, H}));
  EXPECT_EQ(children_of(t.levels[1]), (std::vector<std::uint32_t>{3, 3, 3}));
  EXPECT_EQ(children_of(t.levels[2]), std::vector<std::uint32_t>(9, 0));
}

TEST(BuildUniquenessTree, MoebiusVertexAKeepsGrowing) {
  const auto t = build_uniqueness_tree(fixtures::moebius_ladder(), A);
  ASSERT_GE(t.height(), 4u);
  EXPECT_EQ(vertices_of(t.levels[1]), (std::vector<Vertex>{B, C, H}));
  EXPECT_EQ(vertices_of(t.levels[2]),
            (std::vector<Vertex>{A, D, G, A, D, E, A, F, G}));
  EXPECT_EQ(children_of(t.levels[2]),
            (std::vector<std::uint32_t>{0, 0, 0, 0, 0, 3, 0, 3, 0}));
  EXPECT_EQ(vertices_of(t.levels[3]),
            (std::vector<Vertex>{C, F, G, D, E, H}));
  EXPECT_EQ(children_of(t.levels[3]), std::vector<std::uint32_t>(6, 3));
}

TEST(BuildUniquenessTree, SingleVertex) {
  const auto t = build_uniqueness_tree(Graph(1), 0);
  EXPECT_EQ(t.height(), 0u);
  ASSERT_EQ(t.levels.size(), 1u);
  EXPECT_EQ(t.levels[0], (std::vector<TreeEntry>{{0, 0}}));
}

TEST(BuildUniquenessTree, Errors) {
  EXPECT_THROW(build_uniqueness_tree(Graph(2), 2), std::out_of_range);
  EXPECT_THROW(build_uniqueness_tree(Graph(2), 0, 0), std::invalid_argument);
}

TEST(BuildAllTrees, Cube) {
  const auto trees = build_all_trees(fixtures::cube());
  ASSERT_EQ(trees.size(), 8u);
  EXPECT_EQ(trees[A].height(), 2u);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(trees[v].root, v);
}

TEST(BuildAllTrees, EmptyGraph) {
  const auto trees = build_all_trees(Graph(3));
  ASSERT_EQ(trees.size(), 3u);
  for (const auto& t : trees) EXPECT_EQ(t.height(), 0u);
}

TEST(BuildAllTrees, K2AlternatesUpToTheCap) {
  // Every level holds a single entry, which is unique, so the tree only
  // stops at the cap n = 2: 0 -> 1 -> 0.
  const auto trees = build_all_trees(complete_graph(2));
  ASSERT_EQ(trees.size(), 2u);
  EXPECT_EQ(trees[0].levels,
            (std::vector<std::vector<TreeEntry>>{{{0, 1}}, {{1, 1}}, {{0, 0}}}));
  EXPECT_EQ(trees[1].levels,
            (std::vector<std::vector<TreeEntry>>{{{1, 1}}, {{0, 1}}, {{1, 0}}}));
}

TEST(BuildUniquenessTree, HeightCapIsHonored) {
  const auto g = fixtures::moebius_ladder();
  const auto capped = build_uniqueness_tree(g, A, 3);
  EXPECT_EQ(capped.height(), 3u);
  EXPECT_EQ(children_of(capped.levels[3]), std::vector<std::uint32_t>(6, 0));
  // The shorter cap is a prefix of the full tree apart from the last
  // level's child counts.
  const auto full = build_uniqueness_tree(g, A);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(capped.levels[k], full.levels[k]);
}

TEST(TreeProfile, CubeVertexA) {
  const auto p = tree_profile(build_uniqueness_tree(fixtures::cube(), A), 8);
  EXPECT_EQ(p.height, 2u);
  EXPECT_EQ(p.widths, (std::vector<std::size_t>{1, 3, 9}));
  std::vector<std::uint32_t> level0(8, 0), level1(8, 0), level2(8, 0);
  level0[3] = 1;
  level1[3] = 3;
  level2[0] = 9;
  EXPECT_EQ(p.child_histograms,
            (std::vector<std::vector<std::uint32_t>>{level0, level1, level2}));
}

TEST(TreeProfile, SingleRoot) {
  const auto p = tree_profile(build_uniqueness_tree(Graph(1), 0), 1);
  EXPECT_EQ(p.height, 0u);
  EXPECT_EQ(p.widths, std::vector<std::size_t>{1});
  EXPECT_EQ(p.child_histograms,
            (std::vector<std::vector<std::uint32_t>>{{1}}));
}

TEST(TreeProfile, MoebiusVertexA) {
  const auto p =
      tree_profile(build_uniqueness_tree(fixtures::moebius_ladder(), A), 8);
  EXPECT_GE(p.height, 4u);
  EXPECT_EQ(std::vector<std::size_t>(p.widths.begin(), p.widths.begin() + 5),
            (std::vector<std::size_t>{1, 3, 9, 6, 18}));
  EXPECT_EQ(p.child_histograms[2][0], 7u);
  EXPECT_EQ(p.child_histograms[2][3], 2u);
}

TEST(Dump, Format) {
  const auto t = build_uniqueness_tree(complete_graph(2), 0);
  EXPECT_EQ(dump_tree(t), "height 2\n0:1\n1:1\n0:0\n");
  EXPECT_EQ(dump_profile(tree_profile(t, 2)),
            "widths 1 1 1\nhistogram 0 1:1\nhistogram 1 1:1\nhistogram 2 0:1\n");
}

TEST(UnitreeProperty, MatchesReferenceLoop) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = arbitrary_graph(seed, 14);
    for (Vertex v = 0; v < g.order(); ++v) {
      EXPECT_EQ(build_uniqueness_tree(g, v), reference_tree(g, v, g.order()))
          << "seed " << seed << " root " << v;
      if (g.order() >= 2) {
        EXPECT_EQ(build_uniqueness_tree(g, v, g.order() - 1),
                  reference_tree(g, v, g.order() - 1))
            << "seed " << seed << " root " << v;
      }
    }
  }
}

TEST(UnitreeProperty, ScanStrategiesAgree) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = arbitrary_graph(seed, 30);
    EXPECT_EQ(build_all_trees(g, UniquenessScan::counting),
              build_all_trees(g, UniquenessScan::pairwise))
        << "seed " << seed;
  }
}

TEST(UnitreeProperty, StructuralBounds) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = arbitrary_graph(seed, 40);
    const std::size_t n = g.order();
    for (const auto& t : build_all_trees(g)) {
      EXPECT_LE(t.height(), n);
      EXPECT_LE(t.entry_count(), n * n * (t.height() + 1));
      ASSERT_EQ(t.levels[0].size(), 1u);
      for (const auto& level : t.levels) {
        if (n >= 2) EXPECT_LE(level.size(), n * (n - 1));
        for (const auto& e : level) {
          EXPECT_LE(e.child_count, g.max_degree());
          if (e.child_count > 0) {
            EXPECT_EQ(std::count_if(level.begin(), level.end(),
                                    [&](const TreeEntry& o) {
                                      return o.vertex == e.vertex;
                                    }),
                      1);
          }
        }
      }
      // Every entry below the root has a parent with children.
      for (std::size_t k = 0; k + 1 < t.levels.size(); ++k) {
        std::size_t produced = 0;
        for (const auto& e : t.levels[k]) produced += e.child_count;
        EXPECT_EQ(produced, t.levels[k + 1].size());
      }
      const auto p = tree_profile(t, n);
      ASSERT_EQ(p.widths.size(), p.height + 1);
      EXPECT_EQ(p.widths[0], 1u);
      for (std::size_t k = 0; k < p.widths.size(); ++k) {
        std::size_t total = 0;
        for (auto c : p.child_histograms[k]) total += c;
        EXPECT_EQ(total, p.widths[k]);
      }
    }
  }
}

TEST(UnitreeProperty, ProfileIsLabelEquivariant) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = arbitrary_graph(seed, 20);
    Engine rng(seed + 1000);
    const Permutation p = random_permutation(rng, g.order());
    const Graph image = apply_permutation(g, p);
    for (Vertex v = 0; v < g.order(); ++v) {
      EXPECT_EQ(tree_profile(build_uniqueness_tree(g, v), g.order()),
                tree_profile(build_uniqueness_tree(image, p[v]), g.order()))
          << "seed " << seed << " vertex " << v;
    }
  }
}

TEST(UnitreeProperty, Deterministic) {
  const Graph g = random_graph({30, 0.2, 99});
  EXPECT_EQ(build_all_trees(g), build_all_trees(g));
}

}  // namespace
}  // namespace uniqtree
