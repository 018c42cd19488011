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


#include "uniqtree/oracle.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "uniqtree/fixtures.hpp"
#include "uniqtree/gen.hpp"

namespace uniqtree {
namespace {

using testing::arbitrary_graph;
using testing::complete_graph;
using testing::path_graph;

TEST(BruteForce, CubeVersusMoebius) {
  const auto r =
      brute_force_isomorphic(fixtures::cube(), fixtures::moebius_ladder());
  EXPECT_EQ(r.verdict, OracleVerdict::non_isomorphic);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_GT(r.nodes, 0u);  // same degree sequence, so a real search ran
}

TEST(BruteForce, PathVersusTriangle) {
  const auto r = brute_force_isomorphic(path_graph(3), complete_graph(3));
  EXPECT_EQ(r.verdict, OracleVerdict::non_isomorphic);
  EXPECT_EQ(r.nodes, 0u);
}

TEST(BruteForce, DifferentOrders) {
  EXPECT_EQ(brute_force_isomorphic(Graph(2), Graph(3)).verdict,
            OracleVerdict::non_isomorphic);
}

TEST(BruteForce, DegreeMismatchNeedsNoSearch) {
  // Same edge count, different degree sequences: star vs path on 4.
  const Graph star = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  const auto r = brute_force_isomorphic(star, path_graph(4));
  EXPECT_EQ(r.verdict, OracleVerdict::non_isomorphic);
  EXPECT_EQ(r.nodes, 0u);
}

TEST(BruteForce, PermutedCopiesCarryValidWitnesses) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = arbitrary_graph(seed, 8);
    Engine rng(seed + 5);
    const Graph h = apply_permutation(g, random_permutation(rng, g.order()));
    const auto r = brute_force_isomorphic(g, h);
    ASSERT_EQ(r.verdict, OracleVerdict::isomorphic) << "seed " << seed;
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(verify_witness(g, h, *r.witness));
  }
}

TEST(BruteForce, BudgetExhaustionIsInconclusive) {
  const Graph rook = fixtures::rook_4x4();
  const auto r = brute_force_isomorphic(rook, fixtures::shrikhande(), 5);
  EXPECT_EQ(r.verdict, OracleVerdict::inconclusive);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(BruteForce, SymmetricAndRelabelingInvariant) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Engine rng(seed);
    const std::size_t n = uniform_below(rng, 8);
    const Graph g = random_graph({n, 0.5, rng()});
    const Graph h = random_graph({n, 0.5, rng()});
    const auto forward = brute_force_isomorphic(g, h).verdict;
    EXPECT_EQ(brute_force_isomorphic(h, g).verdict, forward);
    const Graph g2 = apply_permutation(g, random_permutation(rng, n));
    EXPECT_EQ(brute_force_isomorphic(g2, h).verdict, forward);
  }
}

// Number of isomorphism classes of graphs on n vertices: 1, 1, 2, 4, 11, 34.
TEST(BruteForce, CountsIsomorphismClasses) {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34};
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<Graph> representatives;
    enumerate_all_graphs(n, [&](const Graph& g) {
      for (const auto& rep : representatives) {
        if (brute_force_isomorphic(g, rep).verdict ==
            OracleVerdict::isomorphic) {
          return;
        }
      }
      representatives.push_back(g);
    });
    EXPECT_EQ(representatives.size(), expected[n]) << "n = " << n;
  }
}

TEST(VerifyWitness, Examples) {
  const Graph g = random_graph({7, 0.4, 3});
  EXPECT_TRUE(verify_witness(g, g, Permutation::identity(7)));

  // K2 plus an isolated vertex, relabeled so the isolated vertex is 0.
  const Graph k2_plus = Graph::from_edges(3, std::vector<Edge>{{0, 1}});
  const Graph relabeled = Graph::from_edges(3, std::vector<Edge>{{1, 2}});
  EXPECT_TRUE(verify_witness(k2_plus, relabeled, Permutation({1, 2, 0})));
  EXPECT_FALSE(verify_witness(k2_plus, relabeled, Permutation::identity(3)));

  EXPECT_THROW(verify_witness(g, g, Permutation::identity(6)),
               std::invalid_argument);
}

TEST(EnumerateAllGraphs, Counts) {
  const std::size_t expected[] = {1, 1, 2, 8, 64, 1024, 32768};
  for (std::size_t n = 0; n <= 6; ++n) {
    std::size_t count = 0;
    std::size_t edges = 0;
    enumerate_all_graphs(n, [&](const Graph& g) {
      ++count;
      edges += g.edge_count();
    });
    EXPECT_EQ(count, expected[n]);
    // Each of the C(n,2) pairs is present in exactly half of the graphs.
    EXPECT_EQ(edges, expected[n] * (n * (n - (n > 0)) / 2) / 2);
  }
}

TEST(EnumerateAllGraphs, DistinctAndRefusesLargeN) {
  std::vector<Graph> all;
  enumerate_all_graphs(4, [&](const Graph& g) { all.push_back(g); });
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_NE(all[i], all[j]);
  }
  EXPECT_THROW(enumerate_all_graphs(7, [](const Graph&) {}),
               std::invalid_argument);
}

}  // namespace
}  // namespace uniqtree
