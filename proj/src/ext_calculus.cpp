// Copyright 2026 The zol Authors.
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

#include "zol/ext_calculus.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

#include "zol/errors.hpp"

namespace zol {
namespace {

// Dinic's algorithm on an integer-capacity network.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : level_(n), iter_(n), adj_(n) {}

  void add_edge(int from, int to, int64_t cap) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  int64_t run(int s, int t) {
    int64_t flow = 0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (int64_t f = dfs(s, t, std::numeric_limits<int64_t>::max())) flow += f;
    }
    return flow;
  }

  // Vertices reachable from s in the residual network after run().
  std::vector<bool> source_side(int s) {
    bfs(s, -1);
    std::vector<bool> out(level_.size());
    for (size_t v = 0; v < level_.size(); ++v) out[v] = level_[v] >= 0;
    return out;
  }

 private:
  struct Arc {
    int to;
    int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a : adj_[v])
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[v] + 1;
          q.push(arcs_[a].to);
        }
    }
    return t >= 0 && level_[t] >= 0;
  }

  int64_t dfs(int v, int t, int64_t pushed) {
    if (v == t) return pushed;
    for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
      Arc& arc = arcs_[adj_[v][i]];
      if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
      if (int64_t got = dfs(arc.to, t, std::min(pushed, arc.cap))) {
        arc.cap -= got;
        arcs_[adj_[v][i] ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<int> level_;
  std::vector<int> iter_;
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

// Returns a vertex set S maximising q*e(S) - p*v(S) when that maximum is
// positive, otherwise nullopt. Requires p > 0.
std::optional<VertexSet> denser_than(const Graph& g, const std::vector<Edge>& edges, int64_t p, int64_t q) {
  const int n = g.order();
  const int64_t m = static_cast<int64_t>(edges.size());
  const int s = n;
  const int t = n + 1;
  MaxFlow flow(n + 2);
  for (int v = 0; v < n; ++v) {
    flow.add_edge(s, v, q * m);
    flow.add_edge(v, t, q * m + 2 * p - q * g.degree(v));
  }
  for (auto [u, v] : edges) {
    flow.add_edge(u, v, q);
    flow.add_edge(v, u, q);
  }
  const int64_t cut = flow.run(s, t);
  if (cut >= q * m * n) return std::nullopt;
  auto side = flow.source_side(s);
  VertexSet out(n);
  for (int v = 0; v < n; ++v)
    if (side[v]) out.insert(v);
  return out;
}

void check_alpha(const Rational& alpha) {
  if (alpha.sign() <= 0) throw PreconditionError("alpha must be positive, got " + alpha.str());
}

}  // namespace

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::Safe:
      return "safe";
    case PairClass::Rigid:
      return "rigid";
    case PairClass::Neutral:
      return "neutral";
    case PairClass::None:
      return "none";
  }
  return "none";
}

Rational f_alpha(const RootedPair& pair, const Rational& alpha) {
  return Rational(pair.v_outside()) - alpha * Rational(pair.e_outside());
}

Rational f_alpha(const Graph& host, const VertexSet& outer, const VertexSet& inner, const Rational& alpha) {
  if (!inner.is_subset_of(outer)) throw PreconditionError("f_alpha: inner set is not contained in outer set");
  const int64_t dv = outer.size() - inner.size();
  const int64_t de = host.edges_within(outer) - host.edges_within(inner);
  return Rational(dv) - alpha * Rational(de);
}

Classification classify_pair(const Graph& host, const VertexSet& outer, const VertexSet& inner,
                             const Rational& alpha, int bound) {
  check_alpha(alpha);
  if (!inner.is_subset_of(outer)) throw PreconditionError("classify_pair: H is not contained in G");
  const VertexSet outside = outer - inner;
  const std::vector<int> d = outside.to_vector();
  const int k = static_cast<int>(d.size());
  if (k == 0) throw PreconditionError("classify_pair: H = G");
  if (k > bound || k > 30)
    throw BoundError("classify_pair: v(G,H) = " + std::to_string(k) + " exceeds bound " + std::to_string(bound));

  // Edges from each outside vertex into H and into the other outside vertices.
  std::vector<int> to_inner(k);
  std::vector<uint32_t> to_outside(k, 0);
  for (int i = 0; i < k; ++i) {
    to_inner[i] = (host.neighbours(d[i]) & inner).size();
    for (int j = 0; j < k; ++j)
      if (host.adjacent(d[i], d[j])) to_outside[i] |= uint32_t{1} << j;
  }
  const uint32_t full = (k == 32) ? ~uint32_t{0} : ((uint32_t{1} << k) - 1);
  std::vector<int> edges(size_t{full} + 1, 0);
  for (uint32_t a = 1; a <= full && a != 0; ++a) {
    int low = std::countr_zero(a);
    uint32_t rest = a & (a - 1);
    edges[a] = edges[rest] + to_inner[low] + std::popcount(to_outside[low] & rest);
  }
  // Scaled excess: f(S,H) * q = q|A| - p e(A), with alpha = p/q.
  const int64_t p = alpha.num();
  const int64_t q = alpha.den();
  auto excess = [&](uint32_t a) { return q * std::popcount(a) - p * edges[a]; };
  const int64_t total = excess(full);

  Classification out;
  out.f_total = Rational(total, q);
  auto to_set = [&](uint32_t a) {
    VertexSet s = inner;
    for (int i = 0; i < k; ++i)
      if ((a >> i) & 1) s.insert(d[i]);
    return s;
  };
  if (total > 0) {
    for (uint32_t a = 1; a <= full && a != 0; ++a)
      if (excess(a) <= 0) {
        out.witness = to_set(a);
        return out;
      }
    out.kind = PairClass::Safe;
  } else if (total == 0) {
    for (uint32_t a = 1; a < full; ++a)
      if (excess(a) <= 0) {
        out.witness = to_set(a);
        return out;
      }
    out.kind = PairClass::Neutral;
  } else {
    for (uint32_t a = 0; a < full; ++a)
      if (total - excess(a) >= 0) {
        out.witness = to_set(a);
        return out;
      }
    out.kind = PairClass::Rigid;
  }
  return out;
}

Classification classify_pair(const RootedPair& pair, const Rational& alpha, int bound) {
  return classify_pair(pair.g, pair.g.vertices(), pair.h, alpha, bound);
}

Rational rho_max_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw PreconditionError("rho_max of the empty graph is undefined");
  if (n > kBruteForceDensityBound)
    throw BoundError("rho_max_bruteforce: " + std::to_string(n) + " vertices exceeds bound " +
                     std::to_string(kBruteForceDensityBound));
  // Depth-first include/exclude over vertices with incremental edge counts.
  Rational best(0);
  int64_t best_e = 0;
  int64_t best_v = 1;
  struct Frame {
    int next;
    uint64_t chosen;
    int64_t e;
    int64_t v;
  };
  std::vector<Frame> stack{{0, 0, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.v > 0 && f.e * best_v > best_e * f.v) {
      best_e = f.e;
      best_v = f.v;
    }
    if (f.next == n) continue;
    stack.push_back({f.next + 1, f.chosen, f.e, f.v});
    uint64_t bit = uint64_t{1} << f.next;
    stack.push_back({f.next + 1, f.chosen | bit, f.e + std::popcount(g.mask(f.next) & f.chosen), f.v + 1});
  }
  best = Rational(best_e, best_v);
  return best;
}

DensestSubgraph densest_subgraph(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw PreconditionError("rho_max of the empty graph is undefined");
  const auto edges = g.edges();
  const int64_t m = static_cast<int64_t>(edges.size());
  if (m == 0) return {Rational(0), VertexSet(n, {0})};

  std::vector<Rational> candidates;
  for (int64_t v = 1; v <= n; ++v) {
    const int64_t max_e = std::min(v * (v - 1) / 2, m);
    for (int64_t e = 1; e <= max_e; ++e) candidates.emplace_back(e, v);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Density >= a/b is tested as density > (aN - 1)/(bN) with N = n + 1: distinct
  // fractions with denominators <= n differ by more than 1/(bN).
  const int64_t scale = n + 1;
  auto at_least = [&](const Rational& c) {
    return denser_than(g, edges, c.num() * scale - 1, c.den() * scale);
  };
  // The smallest candidate 1/n always holds: the whole graph has at least one edge.
  size_t lo = 0;
  size_t hi = candidates.size() - 1;
  while (lo < hi) {
    size_t mid = lo + (hi - lo + 1) / 2;
    if (at_least(candidates[mid]))
      lo = mid;
    else
      hi = mid - 1;
  }
  auto witness = at_least(candidates[lo]);
  DensestSubgraph out{candidates[lo], witness.value_or(VertexSet(n))};
  const Rational attained(g.edges_within(out.vertices), std::max(out.vertices.size(), 1));
  if (!witness || attained != out.density) throw Error("densest_subgraph: internal inconsistency");
  return out;
}

Classification compose_rigid(const Graph& gprime, const VertexSet& g, const VertexSet& h, const Rational& alpha) {
  const VertexSet all = gprime.vertices();
  if (!h.is_subset_of(g) || h == g || !g.is_subset_of(all) || g == all)
    throw PreconditionError("compose_rigid: expected strictly nested H ⊂ G ⊂ G'");
  return classify_pair(gprime, all, h, alpha);
}

bool safe_composition_holds(const Graph& g, const VertexSet& u, const VertexSet& w, const Rational& alpha) {
  const VertexSet all = g.vertices();
  if (!w.is_subset_of(u) || w == u) throw HypothesisError("safe composition: W must be a proper subset of U");
  if (!u.is_subset_of(all)) throw HypothesisError("safe composition: U must be a subset of V(G)");
  if (u == all) throw HypothesisError("safe composition: (G,U) cannot be neutral when U = G");
  if (classify_pair(g, all, u, alpha).kind != PairClass::Neutral)
    throw HypothesisError("safe composition: (G,U) is not alpha-neutral");
  if (w.empty()) {
    auto sub = induced_subgraph(g, u);
    if (rho_max_flow(sub.graph) * alpha >= Rational(1))
      throw HypothesisError("safe composition: W is empty and rho_max(U) >= 1/alpha");
  } else if (classify_pair(g, u, w, alpha).kind != PairClass::Safe) {
    throw HypothesisError("safe composition: (U,W) is not alpha-safe");
  }
  const VertexSet outside = all - u;
  const VertexSet middle = u - w;
  bool bridged = false;
  for (int v : outside) bridged = bridged || g.neighbours(v).intersects(middle);
  if (!bridged) throw HypothesisError("safe composition: no edge between V(G)\\V(U) and V(U)\\V(W)");
  return classify_pair(g, all, w, alpha).kind == PairClass::Safe;
}

}  // namespace zol
