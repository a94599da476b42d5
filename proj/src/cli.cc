// Copyright 2026 The Authors.
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

#include "fairpath/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "fairpath/dp_solver.h"
#include "fairpath/error.h"
#include "fairpath/graph_io.h"
#include "fairpath/testkit.h"

namespace fairpath::cli {
namespace {

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

long long ParseInt(const std::string& text, const std::string& what) {
  size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorCode::kParse, "bad " + what + " '" + text + "'");
  }
  return value;
}

// Longest vertex count a path within `ell` can have.
int VertexCap(const ColoredDigraph& graph, Length ell) {
  Length min_len = 0;
  for (const Arc& a : graph.arcs()) {
    if (min_len == 0 || a.length < min_len) min_len = a.length;
  }
  const Length steps = min_len == 0 ? 0 : ell / min_len;
  return static_cast<int>(
      std::min<Length>(graph.num_vertices(), steps + 1));
}

std::vector<int> Range(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

bool Accepts(const QuerySpec& query, const std::vector<BoundsSpec>& specs,
             const ColorCounts& counts) {
  if (std::holds_alternative<BalanceVariant>(query.variant)) {
    return IsBalanceFair(counts);
  }
  return std::any_of(specs.begin(), specs.end(), [&](const BoundsSpec& s) {
    return SatisfiesBounds(counts, s);
  });
}

std::string ReadAll(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

FairnessVariant ParseVariant(const std::string& text) {
  const auto parts = Split(text, ':');
  if (parts.empty()) throw Error(ErrorCode::kParse, "empty variant");
  const std::string& kind = parts[0];
  FairnessVariant variant;
  if (kind == "balance" && parts.size() == 1) {
    variant = BalanceVariant{};
  } else if (kind == "maxmin" && (parts.size() == 2 || parts.size() == 3)) {
    MaxMinVariant v;
    v.slack = static_cast<int>(ParseInt(parts[1], "slack"));
    if (parts.size() == 3) {
      if (parts[2] == "difference") {
        v.mode = SlackMode::kDifference;
      } else if (parts[2] == "quotient") {
        v.mode = SlackMode::kQuotient;
      } else {
        throw Error(ErrorCode::kParse, "unknown slack mode '" + parts[2] + "'");
      }
    }
    variant = v;
  } else if (kind == "proportional" && parts.size() == 2) {
    variant = ProportionalVariant{static_cast<int>(ParseInt(parts[1], "slack"))};
  } else if (kind == "mov" && parts.size() == 2) {
    variant =
        MarginOfVictoryVariant{static_cast<int>(ParseInt(parts[1], "slack"))};
  } else {
    throw Error(ErrorCode::kParse, "unknown variant '" + text + "'");
  }
  ValidateVariant(variant);
  return variant;
}

SolverChoice ParseSolver(const std::string& text) {
  if (text == "auto") return SolverChoice::kAuto;
  if (text == "dp") return SolverChoice::kDp;
  if (text == "fpt") return SolverChoice::kFpt;
  if (text == "oracle") return SolverChoice::kOracle;
  throw Error(ErrorCode::kParse, "unknown solver '" + text + "'");
}

std::string SolverName(SolverChoice solver) {
  switch (solver) {
    case SolverChoice::kAuto: return "auto";
    case SolverChoice::kDp: return "dp";
    case SolverChoice::kFpt: return "fpt";
    case SolverChoice::kOracle: return "oracle";
  }
  return "?";
}

BoundsSpec ParseInlineBounds(const std::vector<std::string>& items,
                             int num_colors, int num_vertices) {
  std::vector<int> alphas(num_colors, 0);
  std::vector<int> betas(num_colors, num_vertices);
  for (const std::string& item : items) {
    const auto parts = Split(item, ':');
    if (parts.size() != 3) {
      throw Error(ErrorCode::kParse, "bounds item '" + item +
                                         "' is not color:alpha:beta");
    }
    const long long color = ParseInt(parts[0], "color");
    if (color < 1 || color > num_colors) {
      throw Error(ErrorCode::kColorOutOfRange,
                  "bounds color " + parts[0] + " outside 1.." +
                      std::to_string(num_colors));
    }
    alphas[color - 1] = static_cast<int>(ParseInt(parts[1], "alpha"));
    betas[color - 1] = static_cast<int>(ParseInt(parts[2], "beta"));
  }
  return BoundsSpec::Create(std::move(alphas), std::move(betas));
}

BoundsSpec ParseBoundsFile(const std::string& text, int num_colors,
                           int num_vertices) {
  std::vector<int> alphas(num_colors, 0);
  std::vector<int> betas(num_colors, num_vertices);
  std::optional<int> k;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tag == "b") {
      long long color, alpha, beta;
      if (!(fields >> color >> alpha >> beta)) {
        throw Error(ErrorCode::kParse, where + "expected 'b <color> <alpha> <beta>'");
      }
      if (color < 1 || color > num_colors) {
        throw Error(ErrorCode::kColorOutOfRange, where + "color out of range");
      }
      alphas[color - 1] = static_cast<int>(alpha);
      betas[color - 1] = static_cast<int>(beta);
    } else if (tag == "k") {
      long long value;
      if (!(fields >> value)) throw Error(ErrorCode::kParse, where + "expected 'k <count>'");
      k = static_cast<int>(value);
    } else {
      throw Error(ErrorCode::kParse, where + "unknown tag '" + tag + "'");
    }
  }
  return BoundsSpec::Create(std::move(alphas), std::move(betas), 0, k);
}

std::vector<BoundsSpec> ExpandVariant(const ColoredDigraph& graph,
                                      const QuerySpec& query, Length ell) {
  const int cap = VertexCap(graph, ell);
  const int c = graph.num_colors();
  auto guesses = [&](int lo, int hi) {
    if (query.guesses) return Range(query.guesses->first, query.guesses->second);
    return Range(lo, hi);
  };
  std::vector<BoundsSpec> specs = std::visit(
      [&](const auto& v) -> std::vector<BoundsSpec> {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, BalanceVariant>) {
          const auto g = guesses(1, cap / c);
          return ExpandMaxMin(c, 0, SlackMode::kDifference, g);
        } else if constexpr (std::is_same_v<V, ExplicitBoundsVariant>) {
          return {v.spec};
        } else if constexpr (std::is_same_v<V, MaxMinVariant>) {
          const auto g = guesses(0, cap);
          return ExpandMaxMin(c, v.slack, v.mode, g);
        } else if constexpr (std::is_same_v<V, ProportionalVariant>) {
          const auto g = guesses(1, cap);
          return ExpandProportional(graph, v.slack, g);
        } else {
          const auto g = guesses(0, cap);
          std::vector<BoundsSpec> out;
          for (auto& guess : ExpandMarginOfVictory(c, v.slack, g)) {
            out.push_back(std::move(guess.spec));
          }
          return out;
        }
      },
      query.variant);
  for (auto& spec : specs) spec.ell = ell;
  return specs;
}

SolverChoice ResolveSolver(const ColoredDigraph& graph,
                           const QuerySpec& query) {
  if (query.solver != SolverChoice::kAuto) return query.solver;
  const auto dist = DijkstraDistances(graph, query.source)[query.target];
  const bool single = std::holds_alternative<BalanceVariant>(query.variant) ||
                      std::holds_alternative<ExplicitBoundsVariant>(query.variant);
  if (!dist || (single && query.ell.value_or(*dist) == *dist)) {
    return SolverChoice::kDp;
  }
  return SolverChoice::kFpt;
}

SolveResult Solve(const ColoredDigraph& graph, const QuerySpec& query) {
  const VertexId s = query.source;
  const VertexId t = query.target;
  if (!graph.is_vertex(s) || !graph.is_vertex(t) || s == t) {
    throw Error(ErrorCode::kInvalidQuery,
                "source and target must be distinct vertices of the graph");
  }
  ValidateVariant(query.variant);
  const SolverChoice solver = ResolveSolver(graph, query);
  const std::string name = SolverName(solver);
  const auto dist = DijkstraDistances(graph, s)[t];
  if (!dist) return SolveResult::No("unreachable", name);
  const Length ell = query.ell.value_or(*dist);
  if (solver == SolverChoice::kDp && ell != *dist) {
    throw Error(ErrorCode::kInvalidQuery,
                "the dp solver needs ell = dist(s,t) = " +
                    std::to_string(*dist) + ", got ell = " +
                    std::to_string(ell) + "; use --solver fpt or oracle");
  }
  if (ell < *dist) return SolveResult::No("budget-below-distance", name);

  const auto specs = ExpandVariant(graph, query, ell);
  SolveResult result;
  switch (solver) {
    case SolverChoice::kDp:
      if (std::holds_alternative<BalanceVariant>(query.variant)) {
        result = SolveBalanceFair(graph, s, t);
      } else if (specs.size() == 1) {
        result = SolveExactDistance(graph, s, t, specs.front());
      } else {
        result = SolveOnShortestPaths(graph, s, t, [&](const ColorCounts& x) {
          return Accepts(query, specs, x);
        });
      }
      break;
    case SolverChoice::kFpt: {
      FptOptions options;
      options.epsilon = query.epsilon;
      options.seed = query.seed;
      options.execution = query.execution;
      result = SolveResult::No(specs.empty() ? "infeasible-bounds" : "", name);
      bool any_feasible = false;
      for (const BoundsSpec& spec : specs) {
        SolveResult r = FptSolve(graph, s, t, spec, options);
        if (r.yes) {
          result = std::move(r);
          break;
        }
        any_feasible = any_feasible || r.reason != "infeasible-bounds";
      }
      if (!result.yes) {
        result.reason = any_feasible ? "no-path-found" : "infeasible-bounds";
      }
      break;
    }
    case SolverChoice::kOracle: {
      const testkit::PathPredicate accept =
          [&](const Path& path, const ColorCounts& counts) {
            return path.length <= ell && Accepts(query, specs, counts);
          };
      result = testkit::OracleSolve(graph, s, t, accept, graph.num_vertices(),
                                    ell);
      break;
    }
    case SolverChoice::kAuto:
      break;
  }
  result.solver = name;
  if (result.yes) {
    const Path& w = *result.witness;
    if (!IsValidPath(graph, w) || w.vertices.front() != s ||
        w.vertices.back() != t || w.length > ell ||
        result.counts != CountColors(graph, w) ||
        !Accepts(query, specs, result.counts)) {
      throw Error(ErrorCode::kCorruptTable,
                  "witness failed verification against the query");
    }
  }
  return result;
}

std::string FormatResult(const SolveResult& result, const QuerySpec& query,
                         double millis) {
  std::ostringstream out;
  out << "result " << (result.yes ? "yes" : "no") << '\n';
  if (result.yes) {
    out << "path";
    for (VertexId v : result.witness->vertices) out << ' ' << v + 1;
    out << "\nlength " << result.witness->length << "\ncounts";
    for (int x : result.counts) out << ' ' << x;
    out << '\n';
  } else {
    out << "reason " << result.reason << '\n';
  }
  out << "meta solver=" << result.solver << " seed=" << query.seed
      << " epsilon=" << query.epsilon << " time_ms=" << std::fixed
      << std::setprecision(3) << millis << '\n';
  return out.str();
}

namespace {

struct SolveArgs {
  std::string graph_path;
  int source = 0;
  int target = 0;
  Length ell = 0;
  std::string variant = "balance";
  std::vector<std::string> bounds;
  std::string bounds_file;
  std::string solver = "auto";
  double epsilon = 0.01;
  std::uint64_t seed = 0;
  std::string guesses;
  bool serial = false;
};

// Comment lines `source`, `target`, `ell` and `bounds` written by the
// generators serve as defaults for the matching flags.
std::optional<std::string> CommentValue(const std::vector<std::string>& comments,
                                        const std::string& key) {
  for (const std::string& c : comments) {
    if (c.rfind(key + " ", 0) == 0) return c.substr(key.size() + 1);
  }
  return std::nullopt;
}

int RunSolveCommand(const CLI::App& cmd, const SolveArgs& args,
                    std::ostream& out) {
  const std::string text = ReadAll(args.graph_path);
  const ColoredDigraph graph = ParseGraph(text);
  const auto comments = ReadComments(text);

  auto vertex = [&](const char* flag, int given) -> VertexId {
    long long id = given;
    if (cmd.count(std::string("--") + flag) == 0) {
      const auto from_file = CommentValue(comments, flag);
      if (!from_file) {
        throw Error(ErrorCode::kInvalidQuery,
                    std::string("no --") + flag + " given and none in the file");
      }
      id = ParseInt(*from_file, flag);
    }
    if (id < 1 || id > graph.num_vertices()) {
      throw Error(ErrorCode::kDanglingVertexId,
                  std::string(flag) + " " + std::to_string(id) +
                      " outside 1.." + std::to_string(graph.num_vertices()));
    }
    return static_cast<VertexId>(id - 1);
  };

  QuerySpec query;
  query.source = vertex("source", args.source);
  query.target = vertex("target", args.target);
  if (cmd.count("--ell") > 0) {
    query.ell = args.ell;
  } else if (auto e = CommentValue(comments, "ell")) {
    query.ell = static_cast<Length>(ParseInt(*e, "ell"));
  }
  const int n = graph.num_vertices();
  const int c = graph.num_colors();
  if (cmd.count("--bounds-file") > 0) {
    query.variant = ExplicitBoundsVariant{
        ParseBoundsFile(ReadAll(args.bounds_file), c, n)};
  } else if (cmd.count("--bounds") > 0) {
    query.variant = ExplicitBoundsVariant{ParseInlineBounds(args.bounds, c, n)};
  } else if (cmd.count("--variant") > 0) {
    query.variant = ParseVariant(args.variant);
  } else if (auto b = CommentValue(comments, "bounds")) {
    std::istringstream items(*b);
    std::vector<std::string> list{std::istream_iterator<std::string>(items),
                                  std::istream_iterator<std::string>()};
    query.variant = ExplicitBoundsVariant{ParseInlineBounds(list, c, n)};
  }
  query.solver = ParseSolver(args.solver);
  query.epsilon = args.epsilon;
  if (cmd.count("--seed") > 0) {
    query.seed = args.seed;
  } else if (const char* env = std::getenv("FAIRPATH_SEED")) {
    query.seed = static_cast<std::uint64_t>(ParseInt(env, "FAIRPATH_SEED"));
  }
  if (!args.guesses.empty()) {
    const auto parts = Split(args.guesses, ':');
    if (parts.size() != 2) throw Error(ErrorCode::kParse, "guesses must be lo:hi");
    query.guesses = {static_cast<int>(ParseInt(parts[0], "guess")),
                     static_cast<int>(ParseInt(parts[1], "guess"))};
  }
  query.execution = args.serial ? Execution::kSerial : Execution::kParallel;

  const auto start = std::chrono::steady_clock::now();
  const SolveResult result = Solve(graph, query);
  const double millis = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  out << FormatResult(result, query, millis);
  return result.yes ? 0 : 1;
}

struct RandomArgs {
  testkit::GeneratorConfig config;
  std::string profile = "random";
};

std::string GenerateRandom(const RandomArgs& args) {
  testkit::GeneratorConfig config = args.config;
  if (args.profile == "loose") {
    config.tightness = testkit::Tightness::kLoose;
  } else if (args.profile == "witness") {
    config.tightness = testkit::Tightness::kWitness;
  } else if (args.profile == "random") {
    config.tightness = testkit::Tightness::kRandom;
  } else {
    throw Error(ErrorCode::kParse, "unknown profile '" + args.profile + "'");
  }
  const testkit::Instance inst = testkit::RandomInstance(config);
  std::ostringstream header;
  header << "random seed=" << config.seed << " n=" << config.n
         << " c=" << config.c << " density=" << config.density
         << " max-weight=" << config.max_weight << " profile=" << args.profile;
  std::ostringstream bounds;
  for (int i = 0; i < inst.query.spec.num_colors(); ++i) {
    bounds << (i ? " " : "") << i + 1 << ':' << inst.query.spec.alphas[i]
           << ':' << inst.query.spec.betas[i];
  }
  return SerializeGraph(
      inst.graph,
      {header.str(), "source " + std::to_string(inst.query.source + 1),
       "target " + std::to_string(inst.query.target + 1),
       "ell " + std::to_string(inst.query.spec.ell), "bounds " + bounds.str()});
}

std::string GenerateReduction(const std::string& path, bool eth) {
  const testkit::CliqueInstance clique =
      testkit::ParseClique(ReadAll(path));
  const testkit::ReducedInstance reduced =
      eth ? testkit::ReduceEth(clique) : testkit::ReduceW1(clique);
  return SerializeGraph(
      reduced.graph,
      {std::string(eth ? "reduce-eth" : "reduce-w1") + " k=" +
           std::to_string(clique.k) + " eta=" + std::to_string(clique.eta),
       "source " + std::to_string(reduced.source + 1),
       "target " + std::to_string(reduced.target + 1)});
}

}  // namespace

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Short s-t paths under per-color occurrence bounds"};
  app.name("fairpath");
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Decide a query on an instance file");
  solve->add_option("graph", solve_args.graph_path, "Instance file ('-' for stdin)")
      ->required();
  solve->add_option("--source", solve_args.source, "Source vertex (1-based)");
  solve->add_option("--target", solve_args.target, "Target vertex (1-based)");
  solve->add_option("--ell", solve_args.ell, "Length budget (default dist(s,t))");
  solve->add_option("--variant", solve_args.variant,
                    "balance | maxmin:SLACK[:difference|quotient] | "
                    "proportional:SLACK | mov:SLACK");
  solve->add_option("--bounds", solve_args.bounds,
                    "Per-color bounds COLOR:ALPHA:BETA (repeatable)");
  solve->add_option("--bounds-file", solve_args.bounds_file,
                    "File with 'b COLOR ALPHA BETA' and optional 'k K' lines");
  solve->add_option("--solver", solve_args.solver, "auto | dp | fpt | oracle");
  solve->add_option("--epsilon", solve_args.epsilon,
                    "Failure probability bound for fpt");
  solve->add_option("--seed", solve_args.seed,
                    "Random seed (default $FAIRPATH_SEED, else 0)");
  solve->add_option("--guesses", solve_args.guesses,
                    "Guess range LO:HI for maxmin, proportional and mov");
  solve->add_flag("--serial", solve_args.serial, "Run fpt single-threaded");

  CLI::App* generate = app.add_subcommand("generate", "Write an instance to stdout");
  generate->require_subcommand(1);
  RandomArgs random_args;
  CLI::App* random = generate->add_subcommand("random", "Random instance with a planted path");
  random->add_option("--seed", random_args.config.seed, "Generator seed");
  random->add_option("--n", random_args.config.n, "Vertex count");
  random->add_option("--c", random_args.config.c, "Color count");
  random->add_option("--density", random_args.config.density,
                     "Probability of each extra ordered arc");
  random->add_option("--max-weight", random_args.config.max_weight,
                     "Arc lengths drawn from [1, W]");
  random->add_option("--profile", random_args.profile, "loose | witness | random");
  std::string clique_path;
  CLI::App* w1 = generate->add_subcommand("reduce-w1", "Unary reduction of an mcc file");
  w1->add_option("clique", clique_path, "Clique instance file")->required();
  CLI::App* eth = generate->add_subcommand("reduce-eth", "Binary reduction of an mcc file");
  eth->add_option("clique", clique_path, "Clique instance file")->required();
  int clique_k = 3, clique_eta = 4;
  double clique_density = 0.5;
  bool clique_plant = false;
  std::uint64_t clique_seed = 1;
  CLI::App* clique = generate->add_subcommand("clique", "Random k-partite graph (mcc format)");
  clique->add_option("--k", clique_k, "Number of parts");
  clique->add_option("--eta", clique_eta, "Vertices per part");
  clique->add_option("--density", clique_density,
                     "Probability of each cross-part edge");
  clique->add_flag("--plant", clique_plant, "Plant a multicolored clique");
  clique->add_option("--seed", clique_seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return RunSolveCommand(*solve, solve_args, out);
    if (random->parsed()) {
      out << GenerateRandom(random_args);
    } else if (w1->parsed()) {
      out << GenerateReduction(clique_path, /*eth=*/false);
    } else if (eth->parsed()) {
      out << GenerateReduction(clique_path, /*eth=*/true);
    } else if (clique->parsed()) {
      out << testkit::SerializeClique(testkit::RandomCliqueInstance(
          clique_k, clique_eta, clique_density, clique_plant, clique_seed));
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace fairpath::cli
