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

#ifndef UNIQTREE_CLI_HPP_
#define UNIQTREE_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uniqtree/bench.hpp"
#include "uniqtree/compare.hpp"
#include "uniqtree/oracle.hpp"
#include "uniqtree/unitree.hpp"

namespace uniqtree::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitIsomorphic = 0;
inline constexpr int kExitOk = 0;
inline constexpr int kExitNonIsomorphic = 1;
inline constexpr int kExitError = 2;

struct CheckOptions {
  std::string path_g;
  std::string path_h;
  MatchMode mode = MatchMode::profile;
  bool use_oracle = false;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  bool show_mapping = false;
};

struct TreeOptions {
  std::string path;
  // Decimal vertex index, or a single letter where A (or a) is vertex 0.
  std::string root_label;
  std::optional<std::size_t> height_cap;
};

enum class GenKind { none, iso, perturbed };

struct GenOptions {
  std::size_t n = 10;
  double edge_probability = 0.5;
  std::uint64_t seed = 0;
  GenKind kind = GenKind::iso;
  // Empty means standard output.
  std::string out_g;
  std::string out_h;
};

struct BenchOptions {
  SweepConfig sweep;
  // Empty means standard output.
  std::string csv_path;
  // 0 disables the fit.
  std::size_t fit_min_n = kDefaultFitMinN;
};

struct ProbeOptions {
  std::uint64_t seed = 0;
};

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);
int cmd_tree(const TreeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);
int cmd_probe(const ProbeOptions& opts, std::ostream& out, std::ostream& err);

// Parses `args` (args[0] is the program name) and dispatches to one
// subcommand.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Vertex index for a root label; throws std::invalid_argument.
Vertex parse_root_label(const std::string& label);

}  // namespace uniqtree::cli

#endif  // UNIQTREE_CLI_HPP_
