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

#ifndef UNIQTREE_GRAPH_HPP_
#define UNIQTREE_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uniqtree {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Raised by parse_edge_list. line() is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Finite simple undirected graph on vertices 0..order()-1.
//
// Adjacency lists are sorted ascending, symmetric, loop-free and free of
// duplicates. A Graph is immutable once built.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  // Builds a graph from an edge list. Repeated edges and both orientations of
  // the same pair collapse to one undirected edge. Throws std::out_of_range
  // for an endpoint >= n and std::invalid_argument for a self-loop.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  // Throws std::out_of_range when v >= order().
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t max_degree() const noexcept;

  bool has_edge(Vertex u, Vertex v) const;

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// Bijection on {0, ..., n-1}; map[i] is the image of vertex i.
class Permutation {
 public:
  Permutation() = default;

  // Throws std::invalid_argument unless `map` is a bijection on 0..size-1.
  explicit Permutation(std::vector<Vertex> map);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return map_.size(); }
  Vertex operator[](Vertex i) const { return map_[i]; }
  std::span<const Vertex> images() const noexcept { return map_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> map_;
};

// Parses the edge-list text format:
//
//   n m
//   u v      (m lines, 0 <= u, v < n, u != v)
//
// Tokens are whitespace separated, LF or CRLF line endings are accepted, and
// blank lines and lines starting with '#' are ignored anywhere.
Graph parse_edge_list(std::string_view text);

// Inverse of parse_edge_list: header line then one "u v" line per edge with
// u < v, in lexicographic order.
std::string to_edge_list(const Graph& g);

// Image graph of g under p: (p[u], p[v]) is an edge iff (u, v) is.
// Throws std::invalid_argument if p.size() != g.order().
Graph apply_permutation(const Graph& g, const Permutation& p);

// Ascending neighbor list of v. Throws std::out_of_range if v >= g.order().
std::vector<Vertex> neighbors(const Graph& g, Vertex v);

// Degrees in non-increasing order.
std::vector<std::size_t> degree_sequence(const Graph& g);

}  // namespace uniqtree

#endif  // UNIQTREE_GRAPH_HPP_
