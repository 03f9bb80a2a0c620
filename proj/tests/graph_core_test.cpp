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

#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "zol/canonical.hpp"
#include "zol/errors.hpp"
#include "zol/graph.hpp"
#include "zol/graph6.hpp"

using namespace zol;

namespace {

Graph p3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

// Tick over a three-vertex T: new vertex 3 adjacent to roots 0 and 1 only.
LabeledPair tick_over_three() {
  LabeledPair p;
  p.g = Graph::from_edges(4, {{3, 0}, {3, 1}});
  p.order = {0, 1, 2, 3};
  p.roots = 3;
  return p;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.adjacent(1, 0));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.size() == 2);
  CHECK(g.degree(1) == 2);
  CHECK_THROWS_AS(g.add_edge(3, 3), PreconditionError);
  CHECK_THROWS_AS(g.add_edge(0, 4), PreconditionError);
  g.remove_edge(0, 1);
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(g.size() == 1);
}

TEST_CASE("graphs beyond one bitset word") {
  Graph g = Graph::cycle(150);
  CHECK(g.size() == 150);
  CHECK(g.adjacent(149, 0));
  CHECK(g.degree(70) == 2);
  CHECK(is_connected(g));
  auto sub = induced_subgraph(g, std::vector<int>{0, 1, 2, 149});
  CHECK(sub.graph.size() == 3);
}

TEST_CASE("induced_subgraph examples") {
  auto k3 = induced_subgraph(Graph::complete(3), std::vector<int>{0, 1});
  CHECK(k3.graph.order() == 2);
  CHECK(k3.graph.size() == 1);

  const Graph petersen = from_graph6("IheA@GUAo");
  CHECK(induced_subgraph(petersen, petersen.vertices()).graph == petersen);

  auto ends = induced_subgraph(p3(), std::vector<int>{0, 2});
  CHECK(ends.graph.order() == 2);
  CHECK(ends.graph.size() == 0);
  CHECK(ends.original == std::vector<int>{0, 2});

  CHECK_THROWS_AS(induced_subgraph(p3(), std::vector<int>{0, 3}), PreconditionError);
}

TEST_CASE("is_extension examples") {
  const LabeledPair tick = tick_over_three();
  const std::vector<int> identity{0, 1, 2, 3};
  CHECK(is_extension(tick, tick.g, identity, true, false));

  Graph host = tick.g;
  host.add_edge(3, 2);  // the new vertex also sees the third root
  CHECK_FALSE(is_extension(tick, host, identity, true, false));
  CHECK(is_extension(tick, host, identity, false, false));

  CHECK_THROWS_AS(is_extension(tick, host, std::vector<int>{0, 1, 3}, true, false), PreconditionError);
}

TEST_CASE("generalised extensions allow repeated roots only") {
  LabeledPair tick;
  tick.g = Graph::from_edges(3, {{2, 0}, {2, 1}});
  tick.order = {0, 1, 2};
  tick.roots = 2;
  const Graph host = Graph::from_edges(2, {{0, 1}});
  CHECK(is_extension(tick, host, std::vector<int>{0, 0, 1}, false, true));
  CHECK_THROWS_AS(is_extension(tick, host, std::vector<int>{0, 0, 1}, false, false), PreconditionError);
  CHECK_THROWS_AS(is_extension(tick, Graph(3), std::vector<int>{0, 1, 1}, false, true), PreconditionError);
}

TEST_CASE("canonical_form examples") {
  const Graph k3 = Graph::complete(3);
  CHECK(canonical_form(k3) == canonical_form(k3.relabel(std::vector<int>{2, 0, 1})));
  CHECK(canonical_form(k3) != canonical_form(p3()));
  const Graph p4 = Graph::path(4);
  const Graph star = Graph::star(3);
  REQUIRE(p4.size() == star.size());
  CHECK_FALSE(oracle::isomorphic(p4, star));
  CHECK(canonical_form(p4) != canonical_form(star));
  CHECK_THROWS_AS(canonical_form(Graph(17)), BoundError);
  CHECK_NOTHROW(canonical_form(Graph(17), 20));
}

TEST_CASE("rooted_canonical_form examples") {
  CHECK(rooted_canonical_form(p3(), 0) != rooted_canonical_form(p3(), 1));
  CHECK(rooted_canonical_form(p3(), 0) == rooted_canonical_form(p3(), 2));
  CHECK(rooted_canonical_form(p3(), 0) == rooted_canonical_form(p3(), 0));
  const Graph star = Graph::star(3);
  CHECK(rooted_canonical_form(star, 0) != rooted_canonical_form(star, 1));
}

TEST_CASE("graph6 encodings") {
  CHECK(to_graph6(Graph::complete(3)) == "Bw");
  CHECK(to_graph6(p3()) == "Bg");
  CHECK(to_graph6(Graph(0)) == "?");
  const Graph petersen = from_graph6("IheA@GUAo");
  CHECK(petersen.order() == 10);
  CHECK(petersen.size() == 15);
  for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
  CHECK_THROWS_AS(from_graph6("B"), ParseError);
  CHECK_THROWS_AS(from_graph6("Bx"), ParseError);  // padding bits set

  std::mt19937_64 rng(11);
  for (int n : {1, 5, 62, 63, 64, 100, 300}) {
    const Graph g = oracle::random_graph(rng, n, 0.1);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("rooted graph serialisation round-trips") {
  RootedGraph rg{Graph::star(4), 2};
  std::stringstream ss;
  write_rooted(ss, rg);
  CHECK(read_rooted(ss) == rg);
  std::stringstream bad("Bw\n7\n");
  CHECK_THROWS_AS(read_rooted(bad), ParseError);
}

TEST_CASE("dot export lists every edge") {
  const std::string dot = to_dot(p3(), "P");
  CHECK(dot.find("graph P {") == 0);
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(dot.find("1 -- 2") != std::string::npos);
}

TEST_CASE("property: handshake identity and idempotent restriction") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 300; ++it) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const Graph g = oracle::random_graph(rng, n, 0.2);
    int64_t degrees = 0;
    for (int v = 0; v < n; ++v) degrees += g.degree(v);
    CHECK(degrees == 2 * g.size());
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if (rng() % 2) s.insert(v);
    const Graph once = induced_subgraph(g, s).graph;
    CHECK(induced_subgraph(once, once.vertices()).graph == once);
  }
}

TEST_CASE("property: certificates are invariant under relabeling") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 1000; ++it) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const auto perm = oracle::random_permutation(rng, n);
    CHECK(canonical_form(g) == canonical_form(oracle::permute(g, perm)));
    const int root = static_cast<int>(rng() % n);
    CHECK(rooted_canonical_form(g, root) == rooted_canonical_form(oracle::permute(g, perm), perm[root]));
  }
}

TEST_CASE("property: certificates agree with the permutation oracle") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 1500; ++it) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph a = oracle::random_graph(rng, n, 0.5);
    const Graph b = oracle::random_graph(rng, n, 0.5);
    CHECK((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
    const int ra = static_cast<int>(rng() % n), rb = static_cast<int>(rng() % n);
    CHECK((rooted_canonical_form(a, ra) == rooted_canonical_form(b, rb)) == oracle::isomorphic(a, b, ra, rb));
  }
}

TEST_CASE("property: graph counts up to isomorphism") {
  // Sequence of unlabeled graph counts 1, 2, 4, 11, 34, 156, 1044.
  const int expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) CHECK(oracle::graphs_up_to_iso(n).size() == static_cast<size_t>(expected[n - 1]));
}

TEST_CASE("property: strict extension implies non-strict") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 2000; ++it) {
    LabeledPair pattern;
    const int len = 2 + static_cast<int>(rng() % 4);
    pattern.g = oracle::random_graph(rng, len, 0.5);
    pattern.order = oracle::random_permutation(rng, len);
    pattern.roots = 1 + static_cast<int>(rng() % (len - 1));
    const Graph host = oracle::random_graph(rng, 7, 0.5);
    auto cand = oracle::random_permutation(rng, 7);
    cand.resize(static_cast<size_t>(len));
    if (is_extension(pattern, host, cand, true, false)) CHECK(is_extension(pattern, host, cand, false, false));
  }
}
