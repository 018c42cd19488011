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

#include "uniqtree/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "uniqtree/gen.hpp"
#include "uniqtree/probe.hpp"

namespace uniqtree::cli {

namespace {

constexpr const char* kFormatHelp = R"(
Edge-list format:
  first line "n m" (vertex count, edge line count), then m lines "u v" with
  0 <= u, v < n and u != v. Whitespace separated; LF or CRLF; blank lines and
  lines starting with '#' are ignored. Repeated or reversed edges collapse.

Tree dump (tree):
  "height <h>", then one line per level (root first) of
  "<vertex>:<child_count>" entries, then the profile:
  "widths <w0> <w1> ..." and "histogram <level> <children>:<entries> ...".

Bench CSV (bench):
  n,pair_kind,pairs,elapsed_ms,iso_verdicts,noniso_verdicts,seed,generator
  elapsed_ms is wall-clock milliseconds spent in matching, summed over pairs.

Exit codes:
  0 isomorphic (check) or success, 1 non-isomorphic (check), 2 usage, parse
  or runtime error.
)";

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_edge_list(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

int report_error(std::ostream& err, const std::exception& e) {
  err << "error: " << e.what() << '\n';
  return kExitError;
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(p[static_cast<Vertex>(i)]);
  }
  return out;
}

void write_graph(const std::string& path, const std::string& preamble,
                 const Graph& g, std::ostream& out) {
  const std::string text = preamble + to_edge_list(g);
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

}  // namespace

Vertex parse_root_label(const std::string& label) {
  if (label.size() == 1 && std::isalpha(static_cast<unsigned char>(label[0]))) {
    return static_cast<Vertex>(
        std::toupper(static_cast<unsigned char>(label[0])) - 'A');
  }
  if (label.empty() || label.find_first_not_of("0123456789") !=
                           std::string::npos) {
    throw std::invalid_argument("root must be a vertex index or a letter, got '" +
                                label + "'");
  }
  try {
    return static_cast<Vertex>(std::stoul(label));
  } catch (const std::exception&) {
    throw std::invalid_argument("root index '" + label + "' is too large");
  }
}

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  Graph g;
  Graph h;
  try {
    g = load_graph(opts.path_g);
    h = load_graph(opts.path_h);
  } catch (const std::exception& e) {
    return report_error(err, e);
  }

  const auto result = match_graphs(g, h, opts.mode);
  out << to_string(result.verdict) << '\n';
  if (result.size_mismatch) {
    err << "note: graphs differ in order (" << g.order() << " vs "
        << h.order() << ")\n";
  }
  if (opts.show_mapping) {
    for (std::size_t v = 0; v < result.mapping.size(); ++v) {
      if (result.mapping[v]) out << v << " -> " << *result.mapping[v] << '\n';
    }
  }
  if (opts.use_oracle) {
    const auto oracle = brute_force_isomorphic(g, h, opts.oracle_budget);
    out << "oracle: " << to_string(oracle.verdict);
    if (oracle.verdict == OracleVerdict::inconclusive) {
      out << " (budget of " << opts.oracle_budget << " nodes exhausted)";
    }
    out << '\n';
    const bool agree =
        oracle.verdict == OracleVerdict::inconclusive ||
        (oracle.verdict == OracleVerdict::isomorphic) ==
            (result.verdict == Verdict::isomorphic);
    if (!agree) {
      out << "DISAGREEMENT: algorithm says " << to_string(result.verdict)
          << ", oracle says " << to_string(oracle.verdict) << '\n';
      err << "warning: algorithm and oracle disagree\n";
    }
  }
  return result.verdict == Verdict::isomorphic ? kExitIsomorphic
                                               : kExitNonIsomorphic;
}

int cmd_tree(const TreeOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = load_graph(opts.path);
    const Vertex root = parse_root_label(opts.root_label);
    if (root >= g.order()) {
      throw std::out_of_range("root " + opts.root_label +
                              " out of range for graph of order " +
                              std::to_string(g.order()));
    }
    const auto tree = build_uniqueness_tree(
        g, root, opts.height_cap.value_or(g.order()));
    out << dump_tree(tree) << dump_profile(tree_profile(tree, g.order()));
    return kExitOk;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = random_graph({opts.n, opts.edge_probability, opts.seed});
    std::ostringstream common;
    common << "# generator=" << kGeneratorId << " seed=" << opts.seed
           << " n=" << opts.n << " p=" << opts.edge_probability << " kind="
           << (opts.kind == GenKind::none  ? "none"
               : opts.kind == GenKind::iso ? "iso"
                                           : "perturbed")
           << '\n';
    write_graph(opts.out_g, common.str() + "# role=g\n", g, out);
    if (opts.kind == GenKind::none) return kExitOk;

    // The partner uses an independent stream of the same seed.
    const auto pair_seed = derive_seed(opts.seed, 1);
    std::string preamble = common.str() + "# role=h pair_seed=" +
                           std::to_string(pair_seed) + '\n';
    Graph h;
    if (opts.kind == GenKind::iso) {
      auto pair = isomorphic_pair(g, pair_seed);
      preamble += "# permutation=" + format_permutation(pair.permutation) + '\n';
      h = std::move(pair.graph);
    } else {
      auto pair = perturbed_pair_detailed(g, pair_seed);
      preamble += "# permutation=" + format_permutation(pair.permutation) +
                  " removed=" + std::to_string(pair.removed.u) + "-" +
                  std::to_string(pair.removed.v) +
                  " added=" + std::to_string(pair.added.u) + "-" +
                  std::to_string(pair.added.v) + '\n';
      h = std::move(pair.perturbed);
    }
    write_graph(opts.out_h, preamble, h, out);
    return kExitOk;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const auto records = run_sweep(opts.sweep);
    std::ostream* summary = &err;
    if (opts.csv_path.empty()) {
      write_csv(out, records);
    } else {
      std::ofstream file(opts.csv_path, std::ios::binary);
      if (!file) {
        throw std::runtime_error("cannot write '" + opts.csv_path + "'");
      }
      write_csv(file, records);
      summary = &out;
    }

    std::size_t iso = 0;
    std::size_t pairs = 0;
    for (const auto& r : records) {
      iso += r.iso_verdicts;
      pairs += r.pairs;
    }
    *summary << "verdicts: " << iso << " isomorphic / " << pairs - iso
             << " non-isomorphic over " << pairs << " pairs\n";

    if (opts.fit_min_n > 0) {
      try {
        const auto fit = loglog_fit(records, opts.fit_min_n);
        *summary << std::setprecision(6) << "fit: slope " << fit.slope
                 << ", intercept " << fit.intercept << ", R^2 "
                 << fit.r_squared << " over n in [" << fit.n_lo << ", "
                 << fit.n_hi << "] (" << fit.points << " points)\n";
        if (fit.excluded_nonpositive > 0) {
          err << "warning: " << fit.excluded_nonpositive
              << " records with zero elapsed time excluded from the fit\n";
        }
      } catch (const FitError& e) {
        err << "warning: " << e.what() << '\n';
      }
    }
    return kExitOk;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

int cmd_probe(const ProbeOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    out << render_probe_report(run_probe(opts.seed));
    return kExitOk;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Graph isomorphism testing with uniqueness trees", "uniqtree"};
  app.footer(kFormatHelp);
  app.require_subcommand(1);

  const std::vector<std::string> modes{"profile", "canonical"};
  const std::map<std::string, UniquenessScan> scans{
      {"counting", UniquenessScan::counting},
      {"pairwise", UniquenessScan::pairwise}};

  CheckOptions check;
  std::string check_mode = "profile";
  auto* check_cmd = app.add_subcommand(
      "check", "Decide whether two edge-list graphs are isomorphic");
  check_cmd->add_option("first", check.path_g, "First graph")->required();
  check_cmd->add_option("second", check.path_h, "Second graph")->required();
  check_cmd->add_option("--mode", check_mode, "profile or canonical")
      ->transform(CLI::IsMember(modes, CLI::ignore_case));
  check_cmd->add_flag("--oracle", check.use_oracle,
                      "Also run the brute-force oracle and flag disagreement");
  check_cmd->add_option("--budget", check.oracle_budget,
                        "Oracle search-node budget");
  check_cmd->add_flag("--mapping", check.show_mapping,
                      "Print the vertex pairing as 'v -> u' lines");

  TreeOptions tree;
  std::size_t height_cap = 0;
  auto* tree_cmd =
      app.add_subcommand("tree", "Dump the uniqueness tree of one vertex");
  tree_cmd->add_option("graph", tree.path, "Edge-list graph")->required();
  tree_cmd->add_option("root", tree.root_label,
                       "Root vertex: index, or letter with A = 0")
      ->required();
  tree_cmd->add_option("--height-cap", height_cap,
                       "Maximum tree height (default: n)")
      ->check(CLI::PositiveNumber);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand(
      "gen", "Generate a random graph and optionally a partner graph");
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--p", gen.edge_probability, "Edge probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd
      ->add_option("--kind", gen.kind, "Partner kind: iso, perturbed or none")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, GenKind>{{"none", GenKind::none},
                                         {"iso", GenKind::iso},
                                         {"perturbed", GenKind::perturbed}},
          CLI::ignore_case));
  gen_cmd->add_option("--out-g", gen.out_g, "Output file for the graph");
  gen_cmd->add_option("--out-h", gen.out_h, "Output file for the partner");

  BenchOptions bench;
  std::string bench_kind = "iso";
  std::string bench_mode = "profile";
  auto* bench_cmd = app.add_subcommand(
      "bench", "Time matching over a sweep of graph sizes and fit log-log");
  bench_cmd->add_option("--kind", bench_kind, "iso or perturbed")
      ->transform(CLI::IsMember({"iso", "perturbed"}, CLI::ignore_case));
  bench_cmd->add_option("--n-min", bench.sweep.n_min, "Smallest n")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--n-max", bench.sweep.n_max, "Largest n");
  bench_cmd->add_option("--pairs", bench.sweep.pairs_per_n, "Pairs per n")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--p", bench.sweep.edge_probability,
                        "Edge probability")
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--seed", bench.sweep.seed, "Random seed");
  bench_cmd->add_option("--mode", bench_mode, "profile or canonical")
      ->transform(CLI::IsMember(modes, CLI::ignore_case));
  bench_cmd
      ->add_option("--scan", bench.sweep.scan,
                   "Uniqueness test: pairwise (reference cost) or counting")
      ->transform(CLI::CheckedTransformer(scans, CLI::ignore_case));
  bench_cmd->add_option("--threads", bench.sweep.threads,
                        "Worker threads (timings are unreliable above 1)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--csv", bench.csv_path, "CSV output file");
  bench_cmd->add_option("--fit-min-n", bench.fit_min_n,
                        "Smallest n used by the log-log fit; 0 disables it");

  ProbeOptions probe;
  auto* probe_cmd = app.add_subcommand(
      "probe", "Run both match modes on a hard strongly regular pair");
  probe_cmd->add_option("--seed", probe.seed,
                        "Seed for the relabeled self-pair");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kExitError;
  }

  if (*check_cmd) {
    check.mode = parse_match_mode(check_mode);
    return cmd_check(check, out, err);
  }
  if (*tree_cmd) {
    if (height_cap > 0) tree.height_cap = height_cap;
    return cmd_tree(tree, out, err);
  }
  if (*gen_cmd) return cmd_gen(gen, out, err);
  if (*bench_cmd) {
    bench.sweep.kind = parse_pair_kind(bench_kind);
    bench.sweep.mode = parse_match_mode(bench_mode);
    return cmd_bench(bench, out, err);
  }
  if (*probe_cmd) return cmd_probe(probe, out, err);
  return kExitError;
}

}  // namespace uniqtree::cli
