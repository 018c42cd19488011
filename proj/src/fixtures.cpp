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

#include "uniqtree/fixtures.hpp"

#include <vector>

namespace uniqtree::fixtures {

namespace {

enum : Vertex { A, B, C, D, E, F, G, H };

}  // namespace

Graph cube() {
  const std::vector<Edge> edges = {
      {A, B}, {A, C}, {A, G}, {B, D}, {B, H}, {C, D},
      {C, E}, {D, F}, {E, F}, {E, G}, {F, H}, {G, H},
  };
  return Graph::from_edges(8, edges);
}

Graph moebius_ladder() {
  const std::vector<Edge> edges = {
      {A, B}, {A, C}, {A, H}, {B, D}, {B, G}, {C, D},
      {C, E}, {D, F}, {E, F}, {E, G}, {F, H}, {G, H},
  };
  return Graph::from_edges(8, edges);
}

Graph rook_4x4() {
  std::vector<Edge> edges;
  for (Vertex x = 0; x < 16; ++x) {
    for (Vertex y = x + 1; y < 16; ++y) {
      if (x / 4 == y / 4 || x % 4 == y % 4) edges.push_back({x, y});
    }
  }
  return Graph::from_edges(16, edges);
}

Graph shrikhande() {
  const int steps[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  std::vector<Edge> edges;
  for (Vertex x = 0; x < 16; ++x) {
    const int a = static_cast<int>(x / 4);
    const int b = static_cast<int>(x % 4);
    for (const auto& s : steps) {
      const auto y = static_cast<Vertex>((a + s[0]) % 4 * 4 + (b + s[1]) % 4);
      edges.push_back({x, y});
    }
  }
  return Graph::from_edges(16, edges);
}

}  // namespace uniqtree::fixtures
