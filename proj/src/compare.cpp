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

#include "uniqtree/compare.hpp"

#include <algorithm>
#include <stdexcept>

namespace uniqtree {

std::string_view to_string(Verdict v) {
  return v == Verdict::isomorphic ? "isomorphic" : "non-isomorphic";
}

std::string_view to_string(MatchMode m) {
  return m == MatchMode::profile ? "profile" : "canonical";
}

MatchMode parse_match_mode(std::string_view text) {
  if (text == "profile") return MatchMode::profile;
  if (text == "canonical") return MatchMode::canonical;
  throw std::invalid_argument("unknown match mode '" + std::string(text) +
                              "' (expected profile or canonical)");
}

bool profiles_equal(const TreeProfile& a, const TreeProfile& b) {
  if (a.height != b.height || a.widths != b.widths) return false;
  if (a.child_histograms.size() != b.child_histograms.size()) return false;
  for (std::size_t k = 0; k < a.child_histograms.size(); ++k) {
    const auto& ha = a.child_histograms[k];
    const auto& hb = b.child_histograms[k];
    // Profiles of graphs of different order carry different bucket counts;
    // missing buckets read as zero.
    const std::size_t buckets = std::max(ha.size(), hb.size());
    for (std::size_t c = 0; c < buckets; ++c) {
      const auto x = c < ha.size() ? ha[c] : 0;
      const auto y = c < hb.size() ? hb[c] : 0;
      if (x != y) return false;
    }
  }
  return true;
}

std::string canonical_tree_code(const UniquenessTree& t) {
  if (t.levels.empty()) return "01";
  std::vector<std::string> below(t.levels.back().size(), "01");
  for (std::size_t k = t.levels.size() - 1; k-- > 0;) {
    const auto& level = t.levels[k];
    std::vector<std::string> codes;
    codes.reserve(level.size());
    std::size_t cursor = 0;
    for (const TreeEntry& e : level) {
      if (cursor + e.child_count > below.size()) {
        throw std::invalid_argument("tree child counts overrun level " +
                                    std::to_string(k + 1));
      }
      auto first = below.begin() + static_cast<std::ptrdiff_t>(cursor);
      auto last = first + e.child_count;
      std::sort(first, last);
      std::string code = "0";
      for (auto it = first; it != last; ++it) code += *it;
      code += '1';
      codes.push_back(std::move(code));
      cursor += e.child_count;
    }
    if (cursor != below.size()) {
      throw std::invalid_argument("tree level " + std::to_string(k + 1) +
                                  " has entries without a parent");
    }
    below = std::move(codes);
  }
  return below.front();
}

namespace {

template <typename Signature, typename Equal>
MatchResult greedy_match(const std::vector<Signature>& left,
                         const std::vector<Signature>& right, Equal equal) {
  MatchResult result;
  result.mapping.assign(left.size(), std::nullopt);
  std::vector<bool> taken(right.size(), false);
  std::size_t mapped = 0;
  for (std::size_t v = 0; v < left.size(); ++v) {
    for (std::size_t u = 0; u < right.size(); ++u) {
      if (taken[u] || !equal(left[v], right[u])) continue;
      taken[u] = true;
      result.mapping[v] = static_cast<Vertex>(u);
      ++mapped;
      break;
    }
  }
  result.verdict = mapped == left.size() ? Verdict::isomorphic
                                         : Verdict::non_isomorphic;
  return result;
}

std::vector<TreeProfile> profiles_of(const Graph& g, UniquenessScan scan) {
  std::vector<TreeProfile> out;
  out.reserve(g.order());
  for (const auto& t : build_all_trees(g, scan)) {
    out.push_back(tree_profile(t, g.order()));
  }
  return out;
}

std::vector<std::string> codes_of(const Graph& g, UniquenessScan scan) {
  std::vector<std::string> out;
  out.reserve(g.order());
  for (const auto& t : build_all_trees(g, scan)) {
    out.push_back(canonical_tree_code(t));
  }
  return out;
}

}  // namespace

MatchResult match_graphs(const Graph& g, const Graph& h, MatchMode mode,
                         UniquenessScan scan) {
  if (g.order() != h.order()) {
    MatchResult result;
    result.mode = mode;
    result.size_mismatch = true;
    return result;
  }

  MatchResult result;
  if (mode == MatchMode::profile) {
    result = greedy_match(profiles_of(g, scan), profiles_of(h, scan),
                          profiles_equal);
  } else {
    result = greedy_match(codes_of(g, scan), codes_of(h, scan),
                          [](const std::string& a, const std::string& b) {
                            return a == b;
                          });
  }
  result.mode = mode;
  return result;
}

}  // namespace uniqtree
