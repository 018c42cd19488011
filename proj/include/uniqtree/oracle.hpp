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

#ifndef UNIQTREE_ORACLE_HPP_
#define UNIQTREE_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "uniqtree/graph.hpp"

namespace uniqtree {

// Exact, exponential-time ground truth for small graphs. Independent of the
// uniqueness-tree code.

enum class OracleVerdict { isomorphic, non_isomorphic, inconclusive };

std::string_view to_string(OracleVerdict v);

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::inconclusive;
  // Present iff verdict is isomorphic; maps g onto h.
  std::optional<Permutation> witness;
  // Search-tree nodes visited (0 when an invariant settled the question).
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

// Backtracking search for an isomorphism g -> h. Vertices of g are assigned
// most-constrained first; candidates must match in degree and be consistent
// with every earlier assignment. Returns inconclusive once more than
// `budget` nodes have been expanded.
OracleResult brute_force_isomorphic(const Graph& g, const Graph& h,
                                    std::uint64_t budget = kDefaultOracleBudget);

// True iff apply_permutation(g, p) == h. Throws std::invalid_argument on a
// length mismatch.
bool verify_witness(const Graph& g, const Graph& h, const Permutation& p);

inline constexpr std::size_t kMaxEnumerationOrder = 6;

// Calls `visit` once for each of the 2^(n(n-1)/2) labeled simple graphs on n
// vertices, in increasing order of the edge bitmask (bit i <-> i-th pair in
// lexicographic order). Throws std::invalid_argument for n > 6.
void enumerate_all_graphs(std::size_t n,
                          const std::function<void(const Graph&)>& visit);

}  // namespace uniqtree

#endif  // UNIQTREE_ORACLE_HPP_
