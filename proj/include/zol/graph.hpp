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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zol/vertex_set.hpp"

namespace zol {

using Edge = std::pair<int, int>;

// Finite simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph star(int leaves);  // centre is vertex 0

  int order() const { return n_; }
  int64_t size() const { return m_; }

  // Adds {u,v}; self-loops are rejected, repeated edges are no-ops.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool adjacent(int u, int v) const {
    return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
  }
  int degree(int v) const;
  VertexSet neighbours(int v) const;
  std::span<const uint64_t> row(int v) const {
    return {bits_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
  }
  // Adjacency row as a single word; only valid when order() <= 64.
  uint64_t mask(int v) const { return words_ ? bits_[static_cast<size_t>(v) * words_] : 0; }

  std::vector<Edge> edges() const;
  VertexSet vertices() const { return VertexSet::full(n_); }

  // Number of edges with both endpoints in s.
  int64_t edges_within(const VertexSet& s) const;

  // Graph on vertices perm[v] (perm is a bijection of 0..n-1).
  Graph relabel(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int words_ = 0;
  int64_t m_ = 0;
  std::vector<uint64_t> bits_;
};

struct InducedSubgraph {
  Graph graph;
  // original[i] is the vertex of the source graph that became vertex i.
  std::vector<int> original;
};

// Subgraph induced on the listed vertices, numbered in list order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);
// Subgraph induced on s, numbered in increasing vertex order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g, const VertexSet& within);
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

// Vertices reachable from `from` using only vertices in `within`.
VertexSet reachable(const Graph& g, const VertexSet& from, const VertexSet& within);

// A labeled nested pair (G, H): `order` lists vertices of `g`, the first `roots`
// of which span H. The listed vertices must cover g.
struct LabeledPair {
  Graph g;
  std::vector<int> order;
  int roots = 0;

  int size() const { return static_cast<int>(order.size()); }
};

// Nested pair (G, H) with H the subgraph of g induced on h.
struct RootedPair {
  Graph g;
  VertexSet h;

  int v_outside() const { return g.order() - h.size(); }  // v(G,H)
  int64_t e_outside() const { return g.size() - g.edges_within(h); }  // e(G,H)
};

// Checks whether host restricted to `candidate` (listed in template order) is a
// (G,H)-extension of the candidate roots. Non-strict requires each template
// edge touching a non-root to be present in host; strict requires equivalence.
// Edges between roots are ignored. With `generalised`, candidate roots may
// repeat; non-root candidates must always be distinct and differ from roots.
bool is_extension(const LabeledPair& pattern, const Graph& host, std::span<const int> candidate,
                  bool strict, bool generalised);

std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace zol
