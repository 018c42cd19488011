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

#ifndef UNIQTREE_GEN_HPP_
#define UNIQTREE_GEN_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "uniqtree/graph.hpp"

namespace uniqtree {

// All randomness comes from std::mt19937_64, whose output sequence is fixed
// by the standard. Distributions are implemented here rather than taken from
// <random> so that results do not depend on the standard library vendor:
//
//   bernoulli(p)   : (next() >> 11) * 2^-53 < p
//   uniform [0, k) : rejection sampling on next() against the largest
//                    multiple of k that fits in 64 bits
//   sub-seeds      : splitmix64 of (seed, stream index)
inline constexpr std::string_view kGeneratorId = "mt19937_64+splitmix64/v1";

using Engine = std::mt19937_64;

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenConfig {
  std::size_t n = 0;
  double edge_probability = 0.5;
  std::uint64_t seed = 0;
};

// Independent seed for stream `index` of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

bool bernoulli(Engine& rng, double p);
// Uniform in [0, bound); bound must be positive.
std::uint64_t uniform_below(Engine& rng, std::uint64_t bound);
// Fisher-Yates shuffle of the identity.
Permutation random_permutation(Engine& rng, std::size_t n);

// G(n, p): one Bernoulli trial per unordered pair, pairs visited in
// lexicographic order. Throws std::invalid_argument if p is outside [0, 1].
Graph random_graph(const GenConfig& cfg);

struct IsomorphicPair {
  Graph graph;
  Permutation permutation;
};

// (apply_permutation(g, p), p) for a uniformly random p.
IsomorphicPair isomorphic_pair(const Graph& g, std::uint64_t seed);

struct PerturbedPair {
  // Output of isomorphic_pair(g, seed).
  Graph permuted;
  Permutation permutation;
  // `permuted` with `removed` deleted and `added` inserted.
  Graph perturbed;
  Edge removed;
  Edge added;
};

// Permutes g, then replaces one uniformly random edge by one uniformly random
// non-edge other than the one just removed. Throws GenerationError when g is
// edgeless or complete.
PerturbedPair perturbed_pair_detailed(const Graph& g, std::uint64_t seed);
Graph perturbed_pair(const Graph& g, std::uint64_t seed);

}  // namespace uniqtree

#endif  // UNIQTREE_GEN_HPP_
