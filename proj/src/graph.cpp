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

#include "zol/graph.hpp"

#include <bit>
#include <sstream>

#include "zol/errors.hpp"

namespace zol {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * ((n + 63) / 64), 0) {
  if (n < 0) throw PreconditionError("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw PreconditionError("vertex " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("self-loop on vertex " + std::to_string(u));
  if (adjacent(u, v)) return;
  bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
  bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adjacent(u, v)) return;
  bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(uint64_t{1} << (v & 63));
  bits_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(uint64_t{1} << (u & 63));
  --m_;
}

int Graph::degree(int v) const {
  int d = 0;
  for (uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

VertexSet Graph::neighbours(int v) const {
  VertexSet s(n_);
  for (int w = 0; w < words_; ++w) {
    uint64_t bits = row(v)[w];
    while (bits) {
      s.insert(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

int64_t Graph::edges_within(const VertexSet& s) const {
  int64_t twice = 0;
  auto sw = s.words();
  for (int v : s) {
    if (v >= n_) break;
    auto r = row(v);
    for (size_t w = 0; w < r.size() && w < sw.size(); ++w) twice += std::popcount(r[w] & sw[w]);
  }
  return twice / 2;
}

Graph Graph::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw PreconditionError("relabel: permutation size mismatch");
  Graph g(n_);
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  for (int v : vertices)
    if (v < 0 || v >= g.order())
      throw PreconditionError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
  InducedSubgraph out{Graph(k), std::vector<int>(vertices.begin(), vertices.end())};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (vertices[i] == vertices[j]) throw PreconditionError("induced_subgraph: repeated vertex");
      if (g.adjacent(vertices[i], vertices[j])) out.graph.add_edge(i, j);
    }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  auto vs = s.to_vector();
  return induced_subgraph(g, vs);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

VertexSet reachable(const Graph& g, const VertexSet& from, const VertexSet& within) {
  VertexSet seen = from & within;
  std::vector<int> stack = seen.to_vector();
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbours(v) & within)
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
  }
  return seen;
}

bool is_connected(const Graph& g, const VertexSet& within) {
  int start = within.first();
  if (start < 0) return true;
  return reachable(g, VertexSet(g.order(), {start}), within).size() == within.size();
}

bool is_extension(const LabeledPair& pattern, const Graph& host, std::span<const int> candidate,
                  bool strict, bool generalised) {
  const int len = pattern.size();
  const int k = pattern.roots;
  if (static_cast<int>(candidate.size()) != len)
    throw PreconditionError("is_extension: labeling length mismatch (" + std::to_string(len) + " vs " +
                            std::to_string(candidate.size()) + ")");
  for (int c : candidate)
    if (c < 0 || c >= host.order()) throw PreconditionError("is_extension: candidate vertex out of range");
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      if (candidate[i] != candidate[j]) continue;
      if (i < k && j < k && generalised) continue;
      throw PreconditionError("is_extension: repeated candidate vertex " + std::to_string(candidate[i]));
    }
  for (int i = k; i < len; ++i)
    for (int j = 0; j < len; ++j) {
      if (j == i) continue;
      if (j >= k && j < i) continue;  // pair already visited
      const bool want = pattern.g.adjacent(pattern.order[i], pattern.order[j]);
      const bool have = host.adjacent(candidate[i], candidate[j]);
      if (want && !have) return false;
      if (strict && have && !want) return false;
    }
  return true;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace zol
