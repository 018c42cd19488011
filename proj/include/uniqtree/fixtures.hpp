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

#ifndef UNIQTREE_FIXTURES_HPP_
#define UNIQTREE_FIXTURES_HPP_

#include "uniqtree/graph.hpp"

namespace uniqtree::fixtures {

// Vertex labels A..H map to 0..7 in both 8-vertex graphs below.

// The 3-cube drawn in the plane:
//   A:{B,C,G} B:{A,D,H} C:{A,D,E} D:{B,C,F}
//   E:{C,F,G} F:{D,E,H} G:{A,E,H} H:{B,F,G}
Graph cube();

// The same rungs re-embedded on a Moebius strip (the Wagner graph):
//   A:{B,C,H} B:{A,D,G} C:{A,D,E} D:{B,C,F}
//   E:{C,F,G} F:{D,E,H} G:{B,E,H} H:{A,F,G}
Graph moebius_ladder();

// 4x4 rook's graph: vertex 4i+j is cell (i, j); cells sharing a row or a
// column are adjacent. Strongly regular with parameters (16, 6, 2, 2).
Graph rook_4x4();

// Shrikhande graph: vertex 4a+b is (a, b) in Z4 x Z4, adjacent when the
// difference is one of +-(1,0), +-(0,1), +-(1,1). Same parameters as the
// rook's graph but not isomorphic to it.
Graph shrikhande();

}  // namespace uniqtree::fixtures

#endif  // UNIQTREE_FIXTURES_HPP_
