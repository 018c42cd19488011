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

#ifndef UNIQTREE_BENCH_HPP_
#define UNIQTREE_BENCH_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uniqtree/compare.hpp"
#include "uniqtree/gen.hpp"

namespace uniqtree {

enum class PairKind { iso, perturbed };

std::string_view to_string(PairKind k);
// Accepts "iso" or "perturbed"; throws std::invalid_argument otherwise.
PairKind parse_pair_kind(std::string_view text);

struct BenchRecord {
  std::size_t n = 0;
  PairKind kind = PairKind::iso;
  std::size_t pairs = 0;
  // Wall-clock time spent inside match_graphs, summed over all pairs.
  double elapsed_ms = 0.0;
  std::size_t iso_verdicts = 0;
  std::size_t noniso_verdicts = 0;
  std::uint64_t seed = 0;
  std::string generator{kGeneratorId};

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct SweepConfig {
  PairKind kind = PairKind::iso;
  std::size_t n_min = 1;
  std::size_t n_max = 100;
  std::size_t pairs_per_n = 100;
  double edge_probability = 0.5;
  std::uint64_t seed = 0;
  MatchMode mode = MatchMode::profile;
  // The pairwise scan reproduces the reference cost model whose growth the
  // log-log fit measures; counting is the fast path.
  UniquenessScan scan = UniquenessScan::pairwise;
  // Fresh sub-seeds tried per pair before a perturbed sweep gives up.
  std::size_t max_retries = 64;
  // Worker threads. Anything above 1 contends for the CPU, so elapsed_ms is
  // then meaningless; use it for verdict-accuracy sweeps only.
  std::size_t threads = 1;
};

// Pair j at size n uses graph seed derive_seed(base, 2a) and pair seed
// derive_seed(base, 2a + 1) on attempt a, where
// base = derive_seed(derive_seed(seed, n), j).
struct PairSeeds {
  std::uint64_t graph_seed = 0;
  std::uint64_t pair_seed = 0;
};
PairSeeds pair_seeds(std::uint64_t seed, std::size_t n, std::size_t pair,
                     std::size_t attempt);

// One record per n in [n_min, n_max]. Only match_graphs is timed. Throws
// std::invalid_argument for n_min < 1, n_min > n_max or pairs_per_n < 1, and
// GenerationError when a perturbed pair cannot be drawn within max_retries.
std::vector<BenchRecord> run_sweep(const SweepConfig& cfg);

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;  // ln(ms) at ln(n) = 0
  double r_squared = 0.0;
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
  std::size_t points = 0;
  // Records with n >= n_min_fit dropped because elapsed_ms <= 0.
  std::size_t excluded_nonpositive = 0;
};

inline constexpr std::size_t kDefaultFitMinN = 21;

// Ordinary least squares of ln(elapsed_ms) on ln(n) over records with
// n >= n_min_fit and elapsed_ms > 0. Throws FitError with fewer than three
// usable points or when every usable point has the same n.
FitResult loglog_fit(std::span<const BenchRecord> records,
                     std::size_t n_min_fit = kDefaultFitMinN);

inline constexpr std::string_view kCsvHeader =
    "n,pair_kind,pairs,elapsed_ms,iso_verdicts,noniso_verdicts,seed,"
    "generator";

// Header line then one row per record; elapsed_ms is printed in shortest
// round-trip form.
void write_csv(std::ostream& out, std::span<const BenchRecord> records);
// Throws ParseError on a bad header or row.
std::vector<BenchRecord> read_csv(std::istream& in);

}  // namespace uniqtree

#endif  // UNIQTREE_BENCH_HPP_
