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

#include "fairpath/testkit.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "fairpath/error.h"
#include "fairpath/field.h"

namespace fairpath::testkit {
namespace {

// Sequential draws from a counter-based stream.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, std::uint64_t stream = 0)
      : rng_(seed), stream_(stream) {}

  std::uint64_t Next() { return rng_.Bits(stream_, counter_++); }
  // Uniform-ish integer in [lo, hi].
  long long Uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(Next() %
                                       static_cast<std::uint64_t>(hi - lo + 1));
  }
  double Unit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }
  bool Bernoulli(double p) { return Unit() < p; }

  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[Uniform(0, static_cast<long long>(i) - 1)]);
    }
  }

 private:
  CounterRng rng_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

class GraphBuilder {
 public:
  VertexId AddVertex(ColorId color) {
    colors_.push_back(color);
    return static_cast<VertexId>(colors_.size()) - 1;
  }
  void AddArc(VertexId u, VertexId v, Length w = 1) {
    arcs_.push_back({u, v, w});
  }
  // Unit-length path from `from` through fresh vertices colored `colors`;
  // returns the last vertex (or `from` when `colors` is empty).
  VertexId AddChain(VertexId from, const std::vector<ColorId>& colors) {
    VertexId last = from;
    for (ColorId c : colors) {
      const VertexId v = AddVertex(c);
      AddArc(last, v);
      last = v;
    }
    return last;
  }
  ColoredDigraph Build(int num_colors) {
    const int n = static_cast<int>(colors_.size());
    return ColoredDigraph::Build(n, num_colors, std::move(arcs_),
                                 std::move(colors_));
  }

 private:
  std::vector<ColorId> colors_;
  std::vector<Arc> arcs_;
};

void Repeat(std::vector<ColorId>& out, ColorId color, long long times) {
  for (long long i = 0; i < times; ++i) out.push_back(color);
}

std::vector<std::pair<int, int>> CanonicalEdges(
    const CliqueInstance& instance) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : instance.edges) {
    if (instance.part(u) > instance.part(v)) std::swap(u, v);
    edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

void ValidateClique(const CliqueInstance& instance) {
  if (instance.k < 1 || instance.eta < 1) {
    throw Error(ErrorCode::kDimensionMismatch, "clique instance needs k, eta >= 1");
  }
  const int total = instance.k * instance.eta;
  for (auto [u, v] : instance.edges) {
    if (u < 0 || v < 0 || u >= total || v >= total) {
      throw Error(ErrorCode::kDanglingVertexId, "edge endpoint out of range");
    }
    if (instance.part(u) == instance.part(v)) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "edge inside a partition");
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------

namespace {

// Visits every simple s-t path within the limits, in DFS order with out-arcs
// in input order. Parallel arcs contribute only their shortest copy. Stops
// as soon as `visit` returns false.
void ForEachPath(const ColoredDigraph& graph, VertexId s, VertexId t,
                 int max_vertices, Length max_length,
                 const std::function<bool(const Path&, const ColorCounts&)>&
                     visit) {
  if (!graph.is_vertex(s) || !graph.is_vertex(t) || max_vertices < 1) return;
  std::vector<char> on_path(graph.num_vertices(), 0);
  Path current;
  ColorCounts counts(graph.num_colors(), 0);
  bool stop = false;
  std::function<void(VertexId)> dfs = [&](VertexId u) {
    if (u == t) {
      stop = !visit(current, counts);
      return;
    }
    if (static_cast<int>(current.vertices.size()) >= max_vertices) return;
    std::vector<VertexId> taken;
    for (int idx : graph.out_arcs(u)) {
      const Arc& a = graph.arc(idx);
      if (on_path[a.head] || a.length != *graph.min_arc_length(u, a.head) ||
          a.length > max_length - current.length ||
          std::find(taken.begin(), taken.end(), a.head) != taken.end()) {
        continue;
      }
      taken.push_back(a.head);
      on_path[a.head] = 1;
      current.vertices.push_back(a.head);
      current.length += a.length;
      ++counts[graph.color(a.head)];
      dfs(a.head);
      --counts[graph.color(a.head)];
      current.length -= a.length;
      current.vertices.pop_back();
      on_path[a.head] = 0;
      if (stop) return;
    }
  };
  on_path[s] = 1;
  current.vertices.push_back(s);
  ++counts[graph.color(s)];
  dfs(s);
}

}  // namespace

EnumerationResult EnumerateFairPaths(const ColoredDigraph& graph, VertexId s,
                                     VertexId t, const PathPredicate& accept,
                                     int max_vertices, Length max_length,
                                     size_t max_paths) {
  EnumerationResult result;
  ForEachPath(graph, s, t, max_vertices, max_length,
              [&](const Path& path, const ColorCounts& counts) {
                if (!accept(path, counts)) return true;
                if (result.paths.size() >= max_paths) {
                  result.truncated = true;
                  return false;
                }
                result.paths.push_back(path);
                return true;
              });
  return result;
}

PathPredicate AcceptAll() {
  return [](const Path&, const ColorCounts&) { return true; };
}

PathPredicate BalanceFair() {
  return [](const Path&, const ColorCounts& counts) {
    return IsBalanceFair(counts);
  };
}

PathPredicate WithinBounds(const BoundsSpec& spec) {
  return [spec](const Path& path, const ColorCounts& counts) {
    return path.length <= spec.ell && SatisfiesBounds(counts, spec);
  };
}

PathPredicate ShortestOnly(const ColoredDigraph& graph, VertexId s, VertexId t,
                           PathPredicate inner) {
  const auto dist = DijkstraDistances(graph, s)[t];
  return [dist, inner = std::move(inner)](const Path& path,
                                          const ColorCounts& counts) {
    return dist && path.length == *dist && inner(path, counts);
  };
}

SolveResult OracleSolve(const ColoredDigraph& graph, VertexId s, VertexId t,
                        const PathPredicate& accept, int max_vertices,
                        Length max_length, size_t max_paths) {
  if (!graph.is_vertex(s) || !graph.is_vertex(t) || s == t) {
    throw Error(ErrorCode::kInvalidQuery, "source and target must be distinct vertices");
  }
  size_t visited = 0;
  bool capped = false;
  std::optional<Path> hit;
  ForEachPath(graph, s, t, max_vertices, max_length,
              [&](const Path& path, const ColorCounts& counts) {
                if (accept(path, counts)) {
                  hit = path;
                  return false;
                }
                if (++visited >= max_paths) {
                  capped = true;
                  return false;
                }
                return true;
              });
  if (hit) {
    SolveResult result;
    result.yes = true;
    result.solver = "oracle";
    result.witness = std::move(hit);
    result.counts = CountColors(graph, *result.witness);
    return result;
  }
  if (capped) {
    throw Error(ErrorCode::kCapExceeded,
                "oracle visited " + std::to_string(max_paths) +
                    " paths without a decision");
  }
  if (!DijkstraDistances(graph, s)[t]) {
    return SolveResult::No("unreachable", "oracle");
  }
  return SolveResult::No("no-path", "oracle");
}

std::uint64_t CountDagPaths(const ColoredDigraph& graph, VertexId s,
                            VertexId t) {
  const int n = graph.num_vertices();
  std::vector<int> indegree(n, 0);
  for (const Arc& a : graph.arcs()) ++indegree[a.head];
  std::vector<VertexId> order;
  for (VertexId v = 0; v < n; ++v) {
    if (indegree[v] == 0) order.push_back(v);
  }
  for (size_t i = 0; i < order.size(); ++i) {
    for (int idx : graph.out_arcs(order[i])) {
      if (--indegree[graph.arc(idx).head] == 0) {
        order.push_back(graph.arc(idx).head);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::kInvalidQuery, "graph has a cycle");
  }
  std::vector<std::uint64_t> ways(n, 0);
  ways[s] = 1;
  for (VertexId u : order) {
    if (ways[u] == 0) continue;
    std::set<VertexId> heads;  // parallel arcs count once
    for (int idx : graph.out_arcs(u)) heads.insert(graph.arc(idx).head);
    for (VertexId v : heads) ways[v] += ways[u];
  }
  return ways[t];
}

// ---------------------------------------------------------------------------

Instance RandomInstance(const GeneratorConfig& config) {
  if (config.n < 2 || config.c < 1 || config.max_weight < 1) {
    throw Error(ErrorCode::kDimensionMismatch,
                "generator needs n >= 2, c >= 1, max_weight >= 1");
  }
  Sampler rng(config.seed);
  const int n = config.n;
  std::vector<ColorId> colors(n);
  for (auto& c : colors) c = static_cast<ColorId>(rng.Uniform(0, config.c - 1));

  std::vector<VertexId> middle(n - 2);
  std::iota(middle.begin(), middle.end(), 1);
  rng.Shuffle(middle);
  const int inner = static_cast<int>(rng.Uniform(0, n - 2));
  std::vector<VertexId> backbone{0};
  backbone.insert(backbone.end(), middle.begin(), middle.begin() + inner);
  backbone.push_back(n - 1);

  std::vector<Arc> arcs;
  std::set<std::pair<VertexId, VertexId>> used;
  Length backbone_length = 0;
  for (size_t i = 0; i + 1 < backbone.size(); ++i) {
    const Length w = static_cast<Length>(rng.Uniform(1, config.max_weight));
    arcs.push_back({backbone[i], backbone[i + 1], w});
    used.emplace(backbone[i], backbone[i + 1]);
    backbone_length += w;
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u == v) continue;
      // Always draw so the stream layout does not depend on `used`.
      const bool take = rng.Bernoulli(config.density);
      const Length w = static_cast<Length>(rng.Uniform(1, config.max_weight));
      if (take && !used.count({u, v})) arcs.push_back({u, v, w});
    }
  }
  Instance inst{ColoredDigraph::Build(n, config.c, std::move(arcs), colors),
                {}, backbone};
  inst.query.source = 0;
  inst.query.target = n - 1;
  BoundsSpec spec;
  spec.ell = backbone_length;
  switch (config.tightness) {
    case Tightness::kLoose:
      spec.alphas.assign(config.c, 0);
      spec.betas.assign(config.c, n);
      break;
    case Tightness::kWitness: {
      const ColorCounts counts = CountColors(inst.graph, backbone);
      spec.alphas = counts;
      spec.betas = counts;
      break;
    }
    case Tightness::kRandom:
      for (int i = 0; i < config.c; ++i) {
        const int alpha = static_cast<int>(rng.Uniform(0, 2));
        spec.alphas.push_back(alpha);
        spec.betas.push_back(alpha + static_cast<int>(rng.Uniform(0, 2)));
      }
      break;
  }
  spec.Validate();
  inst.query.spec = std::move(spec);
  return inst;
}

// ---------------------------------------------------------------------------

CliqueInstance RandomCliqueInstance(int k, int eta, double density,
                                    bool plant, std::uint64_t seed) {
  Sampler rng(seed, /*stream=*/7);
  CliqueInstance inst{k, eta, {}};
  for (int pi = 0; pi < k; ++pi) {
    for (int pj = pi + 1; pj < k; ++pj) {
      for (int a = 0; a < eta; ++a) {
        for (int b = 0; b < eta; ++b) {
          if (rng.Bernoulli(density)) {
            inst.edges.emplace_back(inst.id(pi, a), inst.id(pj, b));
          }
        }
      }
    }
  }
  if (plant) {
    std::vector<int> pick(k);
    for (auto& x : pick) x = static_cast<int>(rng.Uniform(0, eta - 1));
    for (int pi = 0; pi < k; ++pi) {
      for (int pj = pi + 1; pj < k; ++pj) {
        inst.edges.emplace_back(inst.id(pi, pick[pi]), inst.id(pj, pick[pj]));
      }
    }
  }
  inst.edges = CanonicalEdges(inst);
  return inst;
}

CliqueInstance ExampleCliqueInstance() {
  CliqueInstance inst{3, 4, {}};
  auto add = [&](int pi, int a, int pj, int b) {
    inst.edges.emplace_back(inst.id(pi, a), inst.id(pj, b));
  };
  add(0, 0, 1, 1);
  add(0, 1, 1, 1);
  add(0, 2, 1, 0);
  add(0, 0, 2, 1);
  add(0, 0, 2, 3);
  add(0, 2, 2, 0);
  add(0, 3, 2, 2);
  add(1, 0, 2, 3);
  add(1, 1, 2, 0);
  add(1, 2, 2, 1);
  add(1, 2, 2, 2);
  add(0, 1, 2, 3);
  add(0, 3, 1, 2);
  return inst;
}

bool HasMulticoloredClique(const CliqueInstance& instance, std::uint64_t cap) {
  ValidateClique(instance);
  const int k = instance.k;
  const int eta = instance.eta;
  double space = 1;
  for (int i = 0; i < k; ++i) space *= eta;
  if (space > static_cast<double>(cap)) {
    throw Error(ErrorCode::kCapExceeded,
                "eta^k = " + std::to_string(space) + " exceeds the cap");
  }
  const int total = k * eta;
  std::vector<char> adj(static_cast<size_t>(total) * total, 0);
  for (auto [u, v] : instance.edges) {
    adj[static_cast<size_t>(u) * total + v] = 1;
    adj[static_cast<size_t>(v) * total + u] = 1;
  }
  std::vector<int> chosen;
  std::function<bool(int)> extend = [&](int part) {
    if (part == k) return true;
    for (int a = 0; a < eta; ++a) {
      const int v = instance.id(part, a);
      bool ok = true;
      for (int u : chosen) {
        if (!adj[static_cast<size_t>(u) * total + v]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(v);
      if (extend(part + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return extend(0);
}

ReducedInstance ReduceW1(const CliqueInstance& instance) {
  ValidateClique(instance);
  const int k = instance.k;
  const int eta = instance.eta;
  if (k < 2) {
    throw Error(ErrorCode::kParameterTooSmall, "unary reduction needs k >= 2");
  }
  const int num_colors = 2 * k * (k - 1) + 1;
  const ColorId special = num_colors - 1;
  auto pair_index = [k](int i, int j) { return i * (k - 1) + (j < i ? j : j - 1); };
  auto r = [&](int i, int j) { return static_cast<ColorId>(2 * pair_index(i, j)); };
  auto rbar = [&](int i, int j) {
    return static_cast<ColorId>(2 * pair_index(i, j) + 1);
  };

  const int num_pairs = k * (k - 1) / 2;
  const int big_k = k + num_pairs + 1;
  GraphBuilder b;
  std::vector<VertexId> hub(big_k);
  for (auto& u : hub) u = b.AddVertex(special);

  for (int i = 0; i < k; ++i) {
    for (int a0 = 0; a0 < eta; ++a0) {
      const int a = a0 + 1;
      std::vector<ColorId> colors;
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        Repeat(colors, r(i, j), a);
        Repeat(colors, rbar(i, j), eta - a);
      }
      b.AddArc(b.AddChain(hub[i], colors), hub[i + 1]);
    }
  }
  const auto edges = CanonicalEdges(instance);
  int slot = k;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j, ++slot) {
      for (auto [u, v] : edges) {
        if (instance.part(u) != i || instance.part(v) != j) continue;
        const int a = instance.index(u) + 1;
        const int bb = instance.index(v) + 1;
        std::vector<ColorId> colors;
        Repeat(colors, r(i, j), eta - a);
        Repeat(colors, rbar(i, j), a);
        Repeat(colors, r(j, i), eta - bb);
        Repeat(colors, rbar(j, i), bb);
        b.AddArc(b.AddChain(hub[slot], colors), hub[slot + 1]);
      }
    }
  }
  // Through u_K a clique path holds eta vertices of every non-special color
  // (a in the selection gadget, eta - a in the verification gadget) and K of
  // the special one; the tail evens these out.
  std::vector<ColorId> tail;
  if (eta >= big_k) {
    Repeat(tail, special, eta - big_k);
  } else {
    for (ColorId c = 0; c < special; ++c) Repeat(tail, c, big_k - eta);
  }
  // An empty tail makes the last hub the target.
  const VertexId target = b.AddChain(hub.back(), tail);
  return {b.Build(num_colors), hub.front(), target};
}

int EncodingLevels(int eta) {
  int levels = 0;
  while ((1LL << levels) < eta) ++levels;
  return levels;
}

ReducedInstance ReduceEth(const CliqueInstance& instance) {
  ValidateClique(instance);
  const int k = instance.k;
  const int eta = instance.eta;
  const int tau = EncodingLevels(eta);
  if (k < 3 || tau < 2) {
    throw Error(ErrorCode::kParameterTooSmall,
                "binary reduction needs k >= 3 and ceil(log2 eta) >= 2");
  }
  const int num_colors = 2 * k + 1;
  const ColorId special = 2 * k;
  auto r = [](int i) { return static_cast<ColorId>(2 * i); };
  auto rbar = [](int i) { return static_cast<ColorId>(2 * i + 1); };
  std::vector<long long> power(tau + 1, 1);  // power[l] = k^(l-1)
  for (int l = 2; l <= tau; ++l) power[l] = power[l - 1] * k;
  const long long level_sum =
      std::accumulate(power.begin() + 1, power.end(), 0LL);

  const int big_k = k + k * (k - 1) / 2 + 1;
  GraphBuilder b;
  std::vector<VertexId> hub(big_k);
  for (auto& u : hub) u = b.AddVertex(special);

  // Highest level first along each path.
  for (int i = 0; i < k; ++i) {
    for (int a = 0; a < eta; ++a) {
      std::vector<ColorId> colors;
      for (int l = tau; l >= 1; --l) {
        const bool bit = (a >> (l - 1)) & 1;
        Repeat(colors, bit ? rbar(i) : r(i), (k - 1) * power[l]);
      }
      b.AddArc(b.AddChain(hub[i], colors), hub[i + 1]);
    }
  }
  const auto edges = CanonicalEdges(instance);
  int slot = k;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j, ++slot) {
      for (auto [u, v] : edges) {
        if (instance.part(u) != i || instance.part(v) != j) continue;
        const int a = instance.index(u);
        const int bb = instance.index(v);
        std::vector<ColorId> colors;
        for (int l = tau; l >= 1; --l) {
          Repeat(colors, ((a >> (l - 1)) & 1) ? r(i) : rbar(i), power[l]);
        }
        for (int l = tau; l >= 1; --l) {
          Repeat(colors, ((bb >> (l - 1)) & 1) ? r(j) : rbar(j), power[l]);
        }
        b.AddArc(b.AddChain(hub[slot], colors), hub[slot + 1]);
      }
    }
  }
  // Head path of special vertices ending just before the first hub.
  const long long head = (k - 1) * level_sum - big_k;
  VertexId source = hub.front();
  if (head > 0) {
    source = b.AddVertex(special);
    VertexId last = source;
    for (long long i = 1; i < head; ++i) {
      const VertexId v = b.AddVertex(special);
      b.AddArc(last, v);
      last = v;
    }
    b.AddArc(last, hub.front());
  }
  return {b.Build(num_colors), source, hub.back()};
}

CliqueInstance ParseClique(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  CliqueInstance inst;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kParse,
                "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (!have_header) {
      std::string kind;
      if (tag != "p" || !(fields >> kind) || kind != "mcc" ||
          !(fields >> inst.k >> inst.eta) || inst.k < 1 || inst.eta < 1) {
        fail("expected 'p mcc <k> <eta>'");
      }
      have_header = true;
      continue;
    }
    if (tag != "e") fail("unknown line tag '" + tag + "'");
    long long u, v;
    if (!(fields >> u >> v)) fail("expected 'e <u> <v>'");
    const long long total = static_cast<long long>(inst.k) * inst.eta;
    if (u < 1 || v < 1 || u > total || v > total) fail("vertex out of range");
    inst.edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  if (!have_header) fail("missing problem line");
  ValidateClique(inst);
  return inst;
}

std::string SerializeClique(const CliqueInstance& instance) {
  std::ostringstream out;
  out << "p mcc " << instance.k << ' ' << instance.eta << '\n';
  for (auto [u, v] : instance.edges) {
    out << "e " << u + 1 << ' ' << v + 1 << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

LayeredInstance LayeredExample() {
  constexpr ColorId kBlue = 0;
  constexpr ColorId kGreen = 1;
  // 0 = s, 1..8 = lower row, 9..16 = upper row, 17 = t.
  const std::vector<ColorId> colors = {
      kBlue,                                                   // s
      kBlue, kGreen, kBlue, kGreen, kBlue, kGreen, kGreen, kBlue,   // lower
      kGreen, kBlue, kGreen, kGreen, kBlue, kGreen, kBlue, kGreen,  // upper
      kGreen};                                                 // t
  auto lo = [](int x) { return static_cast<VertexId>(x); };
  auto up = [](int x) { return static_cast<VertexId>(8 + x); };
  const VertexId s = 0, t = 17;
  const std::vector<std::pair<VertexId, VertexId>> pairs = {
      {s, lo(1)},     {s, up(1)},     {lo(1), lo(2)}, {up(1), lo(2)},
      {up(1), up(2)}, {lo(2), lo(3)}, {lo(2), up(3)}, {up(2), lo(3)},
      {up(2), up(3)}, {lo(3), lo(4)}, {lo(3), up(4)}, {up(3), up(4)},
      {lo(4), lo(5)}, {lo(4), up(5)}, {up(4), up(5)}, {lo(5), lo(6)},
      {lo(5), up(6)}, {up(5), lo(6)}, {lo(6), up(7)}, {up(6), lo(7)},
      {lo(7), lo(8)}, {up(7), lo(8)}, {up(7), up(8)}, {lo(8), t},
      {up(8), t}};
  std::vector<Arc> arcs;
  for (auto [u, v] : pairs) arcs.push_back({u, v, 1});
  LayeredInstance ex{ColoredDigraph::Build(18, 2, std::move(arcs), colors), s, t,
                {}};
  ex.highlighted.vertices = {s,     lo(1), lo(2), up(3), up(4),
                              up(5), lo(6), up(7), lo(8), t};
  ex.highlighted.length = 9;
  return ex;
}

}  // namespace fairpath::testkit
