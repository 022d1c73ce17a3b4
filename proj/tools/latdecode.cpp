// Copyright 2026 The latdecode Authors.
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

// latdecode: shortest-string decoding of acyclic weighted lattices.
//
//   latdecode decode LATTICE [--symbols SYMS] [--semiring log|real] ...
//   latdecode gen --depth D --width W --vocab V [--skew S] [--merge-prob P]
//                 [--seed N]
//   latdecode bench [--depths 4,6,8] [--width W] [--vocab V] [--seeds N]

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latdecode/latdecode.hpp"

namespace {

using namespace latdecode;

enum ExitCode {
  kOk = 0,
  kMismatch = 1,
  kEmptyLanguage = 2,
  kInvalidInput = 3,
  kBudget = 4,
};

struct DecodeConfig {
  std::string input;
  std::string symbols;
  std::string semiring = "log";
  bool oracle = false;
  bool stats = false;
  bool trace = false;
  bool full = false;
  bool print_distances = false;
  std::string dump_dfa;
  std::size_t budget = 1'000'000;
  double delta_det = kDefaultDelta;
  double tolerance = 1e-6;
};

std::string render_string(const std::vector<Label> &labels,
                          const SymbolTable *symbols) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ' ';
    std::optional<std::string> token;
    if (symbols != nullptr) token = symbols->find(labels[i]);
    out += token ? *token : std::to_string(labels[i]);
  }
  return out;
}

std::string render_weight(Weight w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", w);
  return buf;
}

template <typename S>
int decode_with(const DecodeConfig &config, const std::string &text,
                const SymbolTable *symbols) {
  const Automaton<S> a = read_text<S>(text, symbols);
  const auto report = validate(a);
  if (!report.ok()) {
    for (const auto &v : report.violations) {
      std::cerr << "latdecode: invalid lattice: " << v.message << '\n';
    }
    return kInvalidInput;
  }
  if (a.pruned_count() > 0) {
    std::cerr << "latdecode: pruned " << a.pruned_count()
              << " zero-weight arcs/finals\n";
  }

  SearchOptions options;
  options.determinize.delta = config.delta_det;
  options.determinize.max_states = config.budget;
  options.tolerance = config.tolerance;
  if (config.trace) options.trace = &std::cerr;

  if (config.print_distances) {
    const auto alpha = forward_distance(a, View::kBase);
    const auto beta = backward_distance(a, View::kBase);
    for (std::size_t q = 0; q < a.num_states(); ++q) {
      const auto s = static_cast<StateId>(q);
      std::cerr << "distance\t" << q << "\talpha=" << format_weight(alpha[s])
                << "\tbeta=" << format_weight(beta[s]) << '\n';
    }
  }

  SearchResult result;
  std::optional<LazyDeterminizer<S>> det;
  if (config.full) {
    result = shortest_string_via_full_determinization(a, options);
  } else {
    det.emplace(a, options.determinize);
    result = shortest_string(*det, options);
  }
  std::cout << render_string(result.string, symbols) << '\t'
            << render_weight(result.weight) << '\n';

  if (!config.dump_dfa.empty() && det) {
    std::ofstream out(config.dump_dfa, std::ios::binary);
    out << det->dump_text(symbols);
  }
  if (config.stats) {
    nlohmann::ordered_json j;
    j["popped"] = result.stats.popped;
    j["pushed"] = result.stats.pushed;
    j["subsets_built"] = result.stats.subsets_built;
    j["queue_peak"] = result.stats.queue_peak;
    j["arcs_relaxed"] = result.stats.arcs_relaxed;
    std::cerr << j.dump() << '\n';
  }
  if (config.oracle) {
    const auto expected = oracle_shortest_string(a);
    std::cerr << "oracle\t" << render_string(expected.string, symbols) << '\t'
              << render_weight(expected.weight) << '\n';
    if (!approx_eq(result.weight, expected.weight, config.tolerance)) {
      std::cerr << "latdecode: search weight " << format_weight(result.weight)
                << " differs from oracle weight "
                << format_weight(expected.weight) << '\n';
      return kMismatch;
    }
    if (expected.string != result.string) {
      std::cerr << "latdecode: warning: oracle string differs (weights agree "
                   "within tolerance)\n";
    }
  }
  return kOk;
}

int run_decode(const DecodeConfig &config) {
  try {
    const auto kind = parse_semiring_kind(config.semiring);
    if (!kind) {
      std::cerr << "latdecode: unknown semiring '" << config.semiring << "'\n";
      return kInvalidInput;
    }
    std::optional<SymbolTable> symbols;
    if (!config.symbols.empty()) {
      symbols = read_symbols(read_file(config.symbols));
    }
    const std::string text = read_file(config.input);
    const SymbolTable *syms = symbols ? &*symbols : nullptr;
    return dispatch_semiring(*kind, [&](auto semiring) {
      return decode_with<decltype(semiring)>(config, text, syms);
    });
  } catch (const ParseError &e) {
    std::cerr << "latdecode: " << config.input << ": " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InvalidAutomatonError &e) {
    std::cerr << "latdecode: invalid lattice: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const EmptyLanguageError &) {
    std::cerr << "latdecode: empty language\n";
    return kEmptyLanguage;
  } catch (const BudgetError &e) {
    std::cerr << "latdecode: " << e.what() << '\n';
    return kBudget;
  }
}

void add_spec_options(CLI::App &cmd, LatticeSpec &spec) {
  cmd.add_option("--width", spec.width, "Alternatives per position")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--vocab", spec.vocab, "Vocabulary size")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--skew", spec.skew, "Mass concentration exponent");
  cmd.add_option("--merge-prob", spec.merge_prob,
                 "Probability an alternative targets a random next state")
      ->check(CLI::Range(0.0, 1.0));
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Shortest-string decoding of acyclic weighted lattices"};
  app.require_subcommand(1);

  DecodeConfig decode;
  auto *decode_cmd = app.add_subcommand("decode", "Decode a lattice file");
  decode_cmd->add_option("input", decode.input, "Lattice in text format")
      ->required();
  decode_cmd->add_option("--symbols", decode.symbols, "Symbol table file");
  decode_cmd->add_option("--semiring", decode.semiring, "log or real")
      ->check(CLI::IsMember({"log", "real"}));
  decode_cmd->add_flag("--oracle", decode.oracle,
                       "Cross-check against brute-force enumeration");
  decode_cmd->add_flag("--stats", decode.stats, "Search statistics (stderr)");
  decode_cmd->add_flag("--trace", decode.trace, "One line per pop (stderr)");
  decode_cmd->add_flag("--full", decode.full,
                       "Determinize fully before searching");
  decode_cmd->add_flag("--print-distances", decode.print_distances,
                       "Forward/backward distances of the input (stderr)");
  decode_cmd->add_option("--dump-dfa", decode.dump_dfa,
                         "Write the expanded sub-DFA to this file");
  decode_cmd->add_option("--budget", decode.budget, "Max DFA states")
      ->check(CLI::PositiveNumber);
  decode_cmd->add_option("--delta-det", decode.delta_det,
                         "Residual tolerance for subset equality")
      ->check(CLI::NonNegativeNumber);
  decode_cmd->add_option("--tolerance", decode.tolerance,
                         "Oracle agreement tolerance")
      ->check(CLI::NonNegativeNumber);

  LatticeSpec gen_spec;
  auto *gen_cmd = app.add_subcommand("gen", "Write a synthetic lattice");
  gen_cmd->add_option("--depth", gen_spec.depth, "Positions")
      ->check(CLI::PositiveNumber);
  add_spec_options(*gen_cmd, gen_spec);
  gen_cmd->add_option("--seed", gen_spec.seed, "Random seed");

  LatticeSpec bench_spec;
  bench_spec.width = 4;
  bench_spec.vocab = 3;
  bench_spec.merge_prob = 0.5;
  std::vector<int> depths{4, 6, 8, 10, 12, 14, 16};
  std::uint64_t seeds = 10;
  std::uint64_t seed_start = 0;
  std::size_t bench_budget = 4'000'000;
  bool no_timing = false;
  auto *bench_cmd =
      app.add_subcommand("bench", "Sweep synthetic lattices, CSV to stdout");
  bench_cmd->add_option("--depths", depths, "Depths to sweep")
      ->delimiter(',');
  add_spec_options(*bench_cmd, bench_spec);
  bench_cmd->add_option("--seeds", seeds, "Seeds per depth");
  bench_cmd->add_option("--seed-start", seed_start, "First seed");
  bench_cmd->add_option("--budget", bench_budget, "Max DFA states")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--no-timing", no_timing, "Write 0 for wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalidInput;
  }

  if (decode_cmd->parsed()) return run_decode(decode);

  if (gen_cmd->parsed()) {
    std::cout << write_text(generate(gen_spec));
    return kOk;
  }

  std::vector<LatticeSpec> specs;
  for (int depth : depths) {
    for (std::uint64_t s = 0; s < seeds; ++s) {
      LatticeSpec spec = bench_spec;
      spec.depth = depth;
      spec.seed = seed_start + s;
      spec.check();
      specs.push_back(spec);
    }
  }
  BenchOptions options;
  options.determinize.max_states = bench_budget;
  std::cout << bench_csv(bench_run(specs, options), !no_timing);
  return kOk;
}
