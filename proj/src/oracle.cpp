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

#include <stdexcept>
#include <vector>

namespace uniqtree {

std::string_view to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::isomorphic:
      return "isomorphic";
    case OracleVerdict::non_isomorphic:
      return "non-isomorphic";
    case OracleVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix adjacency_matrix(const Graph& g) {
  Matrix m(g.order(), std::vector<char>(g.order(), 0));
  for (const Edge& e : g.edges()) {
    m[e.u][e.v] = 1;
    m[e.v][e.u] = 1;
  }
  return m;
}

// Most-constrained-first order: repeatedly pick the vertex with the most
// already-ordered neighbors, breaking ties by higher degree, then by index.
std::vector<Vertex> search_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> placed_neighbors(n, 0);
  order.reserve(n);
  while (order.size() < n) {
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (!found || placed_neighbors[v] > placed_neighbors[best] ||
          (placed_neighbors[v] == placed_neighbors[best] &&
           g.degree(v) > g.degree(best))) {
        best = v;
        found = true;
      }
    }
    placed[best] = true;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) ++placed_neighbors[w];
  }
  return order;
}

class Search {
 public:
  Search(const Graph& g, const Graph& h, std::uint64_t budget)
      : g_(g),
        h_(h),
        gm_(adjacency_matrix(g)),
        hm_(adjacency_matrix(h)),
        order_(search_order(g)),
        image_(g.order(), 0),
        used_(h.order(), false),
        budget_(budget) {}

  // Returns true once a full assignment is found; sets exhausted() when the
  // budget ran out first.
  bool run() { return extend(0); }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Vertex>& image() const { return image_; }

 private:
  bool consistent(std::size_t depth, Vertex v, Vertex u) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex w = order_[i];
      if (gm_[v][w] != hm_[u][image_[w]]) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex u = 0; u < h_.order(); ++u) {
      if (used_[u] || h_.degree(u) != g_.degree(v)) continue;
      if (!consistent(depth, v, u)) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      image_[v] = u;
      used_[u] = true;
      if (extend(depth + 1)) return true;
      used_[u] = false;
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  Matrix gm_;
  Matrix hm_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

OracleResult brute_force_isomorphic(const Graph& g, const Graph& h,
                                    std::uint64_t budget) {
  OracleResult result;
  if (g.order() != h.order() || g.edge_count() != h.edge_count() ||
      degree_sequence(g) != degree_sequence(h)) {
    result.verdict = OracleVerdict::non_isomorphic;
    return result;
  }

  Search search(g, h, budget);
  const bool found = search.run();
  result.nodes = search.nodes();
  if (found) {
    result.verdict = OracleVerdict::isomorphic;
    result.witness = Permutation(search.image());
  } else {
    result.verdict = search.exhausted() ? OracleVerdict::inconclusive
                                        : OracleVerdict::non_isomorphic;
  }
  return result;
}

bool verify_witness(const Graph& g, const Graph& h, const Permutation& p) {
  if (p.size() != g.order() || g.order() != h.order()) {
    throw std::invalid_argument("witness length " + std::to_string(p.size()) +
                                " does not match graph orders " +
                                std::to_string(g.order()) + " and " +
                                std::to_string(h.order()));
  }
  return apply_permutation(g, p) == h;
}

void enumerate_all_graphs(std::size_t n,
                          const std::function<void(const Graph&)>& visit) {
  if (n > kMaxEnumerationOrder) {
    throw std::invalid_argument("refusing to enumerate all graphs on " +
                                std::to_string(n) + " > " +
                                std::to_string(kMaxEnumerationOrder) +
                                " vertices");
  }
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) edges.push_back(pairs[i]);
    }
    visit(Graph::from_edges(n, edges));
  }
}

}  // namespace uniqtree
