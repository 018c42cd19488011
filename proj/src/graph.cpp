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

#include "uniqtree/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>

namespace uniqtree {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ": " +
                                         what),
      line_(line) {}

Graph::Graph(std::size_t n) : adj_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::out_of_range("edge (" + std::to_string(e.u) + ", " +
                              std::to_string(e.v) + ") has an endpoint >= " +
                              std::to_string(n));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on vertex " +
                                  std::to_string(e.u));
    }
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  std::size_t half_edges = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    half_edges += list.size();
  }
  g.edge_count_ = half_edges / 2;
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= adj_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for graph of order " +
                            std::to_string(adj_.size()));
  }
  return adj_[v];
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Permutation::Permutation(std::vector<Vertex> map) : map_(std::move(map)) {
  std::vector<bool> hit(map_.size(), false);
  for (Vertex image : map_) {
    if (image >= map_.size() || hit[image]) {
      throw std::invalid_argument("permutation is not a bijection on 0.." +
                                  std::to_string(map_.size()));
    }
    hit[image] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = static_cast<Vertex>(i);
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) {
    inv[map_[i]] = static_cast<Vertex>(i);
  }
  return Permutation(std::move(inv));
}

namespace {

// Splits `text` into lines, strips a trailing CR and drops blank and '#'
// lines, handing each remaining line and its 1-based number to `visit`.
void for_each_content_line(
    std::string_view text,
    const std::function<void(std::size_t, std::string_view)>& visit) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    visit(line_no, line.substr(first));
  }
}

std::vector<std::uint64_t> parse_integers(std::size_t line_no,
                                          std::string_view line) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t') {
      ++pos;
      continue;
    }
    std::uint64_t value = 0;
    const char* begin = line.data() + pos;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || (ptr != end && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError(line_no, "expected a non-negative integer, got '" +
                                    std::string(line.substr(pos)) + "'");
    }
    out.push_back(value);
    pos += static_cast<std::size_t>(ptr - begin);
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;

  for_each_content_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto values = parse_integers(line_no, line);
    if (!header) {
      if (values.size() != 2) {
        throw ParseError(line_no, "header must be 'n m'");
      }
      if (values[0] > UINT32_MAX) {
        throw ParseError(line_no, "vertex count too large");
      }
      header.emplace(values[0], values[1]);
      return;
    }
    if (values.size() != 2) {
      throw ParseError(line_no, "edge line must be 'u v'");
    }
    const auto n = header->first;
    if (values[0] >= n || values[1] >= n) {
      throw ParseError(line_no, "vertex index out of range for n = " +
                                    std::to_string(n));
    }
    if (values[0] == values[1]) {
      throw ParseError(line_no,
                       "self-loop on vertex " + std::to_string(values[0]));
    }
    if (edges.size() == header->second) {
      throw ParseError(line_no, "more edge lines than the declared m = " +
                                    std::to_string(header->second));
    }
    edges.push_back(
        {static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1])});
  });

  if (!header) throw ParseError(0, "missing 'n m' header");
  if (edges.size() != header->second) {
    throw ParseError(0, "declared " + std::to_string(header->second) +
                            " edge lines, found " +
                            std::to_string(edges.size()));
  }
  return Graph::from_edges(header->first, edges);
}

std::string to_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " +
                    std::to_string(edges.size()) + "\n";
  for (const Edge& e : edges) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) {
    throw std::invalid_argument(
        "permutation of length " + std::to_string(p.size()) +
        " applied to graph of order " + std::to_string(g.order()));
  }
  auto edges = g.edges();
  for (Edge& e : edges) e = {p[e.u], p[e.v]};
  return Graph::from_edges(g.order(), edges);
}

std::vector<Vertex> neighbors(const Graph& g, Vertex v) {
  const auto list = g.neighbors(v);
  return {list.begin(), list.end()};
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace uniqtree
