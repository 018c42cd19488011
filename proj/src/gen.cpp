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

#include "uniqtree/gen.hpp"

#include <limits>
#include <vector>

namespace uniqtree {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(~index));
}

bool bernoulli(Engine& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - (kMax % bound + 1) % bound;
  std::uint64_t x = rng();
  while (x > limit) x = rng();
  return x % bound;
}

Permutation random_permutation(Engine& rng, std::size_t n) {
  std::vector<Vertex> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = static_cast<Vertex>(i);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = uniform_below(rng, i);
    std::swap(map[i - 1], map[j]);
  }
  return Permutation(std::move(map));
}

Graph random_graph(const GenConfig& cfg) {
  if (!(cfg.edge_probability >= 0.0 && cfg.edge_probability <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  Engine rng(cfg.seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < cfg.n; ++u) {
    for (Vertex v = u + 1; v < cfg.n; ++v) {
      if (bernoulli(rng, cfg.edge_probability)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(cfg.n, edges);
}

namespace {

IsomorphicPair permute_with(Engine& rng, const Graph& g) {
  auto p = random_permutation(rng, g.order());
  auto image = apply_permutation(g, p);
  return {std::move(image), std::move(p)};
}

}  // namespace

IsomorphicPair isomorphic_pair(const Graph& g, std::uint64_t seed) {
  Engine rng(seed);
  return permute_with(rng, g);
}

PerturbedPair perturbed_pair_detailed(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.order();
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (g.edge_count() == 0 || g.edge_count() == pairs) {
    throw GenerationError(
        "perturbed pair needs a graph with at least one edge and one "
        "non-edge");
  }

  Engine rng(seed);
  auto [permuted, p] = permute_with(rng, g);

  auto edges = permuted.edges();
  const auto removed_at = uniform_below(rng, edges.size());
  const Edge removed = edges[removed_at];

  // Non-edges of the permuted graph; the removed edge is not among them.
  std::vector<Edge> candidates;
  candidates.reserve(pairs - edges.size());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!permuted.has_edge(u, v)) candidates.push_back({u, v});
    }
  }
  const Edge added = candidates[uniform_below(rng, candidates.size())];

  edges[removed_at] = added;
  auto perturbed = Graph::from_edges(n, edges);
  return {std::move(permuted), std::move(p), std::move(perturbed), removed,
          added};
}

Graph perturbed_pair(const Graph& g, std::uint64_t seed) {
  return perturbed_pair_detailed(g, seed).perturbed;
}

}  // namespace uniqtree
