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

#include "uniqtree/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>

namespace uniqtree {

std::string_view to_string(PairKind k) {
  return k == PairKind::iso ? "iso" : "perturbed";
}

PairKind parse_pair_kind(std::string_view text) {
  if (text == "iso") return PairKind::iso;
  if (text == "perturbed") return PairKind::perturbed;
  throw std::invalid_argument("unknown pair kind '" + std::string(text) +
                              "' (expected iso or perturbed)");
}

PairSeeds pair_seeds(std::uint64_t seed, std::size_t n, std::size_t pair,
                     std::size_t attempt) {
  const auto base = derive_seed(derive_seed(seed, n), pair);
  return {derive_seed(base, 2 * attempt), derive_seed(base, 2 * attempt + 1)};
}

namespace {

struct Generated {
  Graph g;
  Graph h;
};

Generated generate_pair(const SweepConfig& cfg, std::size_t n,
                        std::size_t pair) {
  for (std::size_t attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    const auto seeds = pair_seeds(cfg.seed, n, pair, attempt);
    auto g = random_graph({n, cfg.edge_probability, seeds.graph_seed});
    if (cfg.kind == PairKind::iso) {
      auto h = isomorphic_pair(g, seeds.pair_seed).graph;
      return {std::move(g), std::move(h)};
    }
    try {
      auto h = perturbed_pair(g, seeds.pair_seed);
      return {std::move(g), std::move(h)};
    } catch (const GenerationError&) {
      // Edgeless or complete draw; retry with the next sub-seed.
    }
  }
  throw GenerationError("no perturbable graph of order " + std::to_string(n) +
                        " after " + std::to_string(cfg.max_retries + 1) +
                        " attempts");
}

using Clock = std::chrono::steady_clock;

// Returns elapsed milliseconds inside match_graphs and the isomorphic count.
std::pair<double, std::size_t> run_pairs(const SweepConfig& cfg, std::size_t n,
                                         std::size_t first, std::size_t last) {
  Clock::duration elapsed{};
  std::size_t iso = 0;
  for (std::size_t j = first; j < last; ++j) {
    const auto pair = generate_pair(cfg, n, j);
    const auto start = Clock::now();
    const auto result = match_graphs(pair.g, pair.h, cfg.mode, cfg.scan);
    elapsed += Clock::now() - start;
    if (result.verdict == Verdict::isomorphic) ++iso;
  }
  return {std::chrono::duration<double, std::milli>(elapsed).count(), iso};
}

}  // namespace

std::vector<BenchRecord> run_sweep(const SweepConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) {
    throw std::invalid_argument("sweep needs 1 <= n_min <= n_max");
  }
  if (cfg.pairs_per_n < 1) {
    throw std::invalid_argument("sweep needs at least one pair per n");
  }

  std::vector<BenchRecord> records;
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    BenchRecord rec;
    rec.n = n;
    rec.kind = cfg.kind;
    rec.pairs = cfg.pairs_per_n;
    rec.seed = cfg.seed;

    const std::size_t workers =
        std::clamp<std::size_t>(cfg.threads, 1, cfg.pairs_per_n);
    if (workers == 1) {
      const auto [ms, iso] = run_pairs(cfg, n, 0, cfg.pairs_per_n);
      rec.elapsed_ms = ms;
      rec.iso_verdicts = iso;
    } else {
      std::mutex mu;
      std::exception_ptr failure;
      std::vector<std::thread> pool;
      const auto wall_start = Clock::now();
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t first = cfg.pairs_per_n * w / workers;
        const std::size_t last = cfg.pairs_per_n * (w + 1) / workers;
        pool.emplace_back([&, first, last] {
          try {
            const auto iso = run_pairs(cfg, n, first, last).second;
            std::lock_guard lock(mu);
            rec.iso_verdicts += iso;
          } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) failure = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      if (failure) std::rethrow_exception(failure);
      rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                           Clock::now() - wall_start)
                           .count();
    }
    rec.noniso_verdicts = rec.pairs - rec.iso_verdicts;
    records.push_back(std::move(rec));
  }
  return records;
}

FitResult loglog_fit(std::span<const BenchRecord> records,
                     std::size_t n_min_fit) {
  FitResult fit;
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : records) {
    if (r.n < n_min_fit || r.n == 0) continue;
    if (!(r.elapsed_ms > 0.0)) {
      ++fit.excluded_nonpositive;
      continue;
    }
    xs.push_back(std::log(static_cast<double>(r.n)));
    ys.push_back(std::log(r.elapsed_ms));
    fit.n_lo = fit.points == 0 ? r.n : std::min(fit.n_lo, r.n);
    fit.n_hi = std::max(fit.n_hi, r.n);
    ++fit.points;
  }
  if (fit.points < 3) {
    throw FitError("log-log fit needs at least 3 records with n >= " +
                   std::to_string(n_min_fit) + " and elapsed_ms > 0, got " +
                   std::to_string(fit.points));
  }

  const double count = static_cast<double>(fit.points);
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= count;
  mean_y /= count;

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw FitError("log-log fit needs at least two distinct n");

  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;

  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += r * r;
  }
  // A constant series leaves only rounding noise in syy; its fit is exact.
  const bool flat = syy <= 1e-24 * count * (1.0 + mean_y * mean_y);
  const double r2 = flat ? 1.0 : 1.0 - ss_res / syy;
  fit.r_squared = std::clamp(r2, 0.0, 1.0);
  return fit;
}

namespace {

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

template <typename T>
T parse_field(std::size_t line_no, std::string_view field) {
  T value{};
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line_no, "bad CSV field '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.n << ',' << to_string(r.kind) << ',' << r.pairs << ','
        << format_double(r.elapsed_ms) << ',' << r.iso_verdicts << ','
        << r.noniso_verdicts << ',' << r.seed << ',' << r.generator << '\n';
  }
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(0, "empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw ParseError(line_no, "unexpected CSV header");

  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_commas(line);
    if (fields.size() != 8) {
      throw ParseError(line_no, "expected 8 CSV fields, got " +
                                    std::to_string(fields.size()));
    }
    BenchRecord r;
    r.n = parse_field<std::size_t>(line_no, fields[0]);
    try {
      r.kind = parse_pair_kind(fields[1]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    r.pairs = parse_field<std::size_t>(line_no, fields[2]);
    r.elapsed_ms = parse_field<double>(line_no, fields[3]);
    r.iso_verdicts = parse_field<std::size_t>(line_no, fields[4]);
    r.noniso_verdicts = parse_field<std::size_t>(line_no, fields[5]);
    r.seed = parse_field<std::uint64_t>(line_no, fields[6]);
    r.generator = std::string(fields[7]);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace uniqtree
