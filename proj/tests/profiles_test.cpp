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

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "zol/errors.hpp"
#include "zol/profiles.hpp"

using namespace zol;

namespace {

const Rational kAlpha(3, 5);
const Rational kCap(5, 3);

const GSetRegistry& small_registry() {
  static const GSetRegistry reg = [] {
    GSetParams p;
    p.v0_bound = 3;
    p.bad_bounds = {1};
    return enumerate_g(p, 1);
  }();
  return reg;
}

const GSetRegistry& desk_registry() {
  static const GSetRegistry reg = [] {
    GSetParams p;
    p.v0_bound = 4;
    p.bad_bounds = {3};
    return enumerate_g(p, 1);
  }();
  return reg;
}

uint64_t full(int n) { return (uint64_t{1} << n) - 1; }

VertexSet set_of(int n, std::initializer_list<int> vs) {
  VertexSet s(n);
  for (int v : vs) s.insert(v);
  return s;
}

std::vector<int> members_of(uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

// Whether some bijection from the pattern onto `target` (root 0 to u) maps
// edges to edges; with `induced` it must also map non-edges to non-edges.
bool maps_onto(const Graph& pattern, const Graph& g, const std::vector<int>& target, int u, bool induced) {
  if (pattern.order() != static_cast<int>(target.size())) return false;
  std::vector<int> img = target;
  std::sort(img.begin(), img.end());
  do {
    if (img[0] != u) continue;
    bool ok = true;
    for (int a = 0; a < pattern.order() && ok; ++a)
      for (int b = a + 1; b < pattern.order() && ok; ++b) {
        const bool p = pattern.adjacent(a, b);
        const bool h = g.adjacent(img[a], img[b]);
        if (p && !h) ok = false;
        if (induced && h && !p) ok = false;
      }
    if (ok) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

// u-bad subgraphs from the definition: induced rooted copies of a member not
// strictly contained in the image of any member.
std::set<std::pair<int, uint64_t>> u_bad_oracle(const Graph& g, int u, const GSetRegistry& reg) {
  const int n = g.order();
  const auto& members = reg.members();
  std::set<uint64_t> images;
  std::set<std::pair<int, uint64_t>> copies;
  for (uint64_t s = 0; s <= full(n); ++s) {
    if (!(s >> u & 1)) continue;
    const auto vs = members_of(s);
    for (size_t i = 0; i < members.size(); ++i) {
      if (members[i].graph.order() != static_cast<int>(vs.size())) continue;
      if (maps_onto(members[i].graph, g, vs, u, false)) images.insert(s);
      if (maps_onto(members[i].graph, g, vs, u, true)) copies.insert({static_cast<int>(i), s});
    }
  }
  std::set<std::pair<int, uint64_t>> out;
  for (const auto& [i, s] : copies)
    if (std::none_of(images.begin(), images.end(), [&](uint64_t t) { return t != s && (t & s) == s; }))
      out.insert({i, s});
  return out;
}

std::set<std::pair<int, uint64_t>> u_bad_found(const ProfileTable& t) {
  std::set<std::pair<int, uint64_t>> out;
  for (const auto& ub : t.u_bad) out.insert({ub.member, ub.vertices.mask()});
  return out;
}

// K1 written out independently: roots r1 r2 r3, new t1 w t3, edges t1r1,
// wr2, t3r3, t1w, wt3.
bool k1_adjacent(int x, int y) {
  static const std::set<std::pair<int, int>> edges{{3, 0}, {4, 1}, {5, 2}, {3, 4}, {4, 5}};
  return edges.count({x, y}) || edges.count({y, x});
}

// Strict generalised K1-extension of (a, b, c) with new vertices in `region`:
// each new vertex is adjacent to root position i exactly when the template
// says so, and the new vertices carry exactly the template edges.
bool zeta1_oracle(const Graph& g, uint64_t region, int a, int b, int c) {
  const int roots[3] = {a, b, c};
  for (int t1 : members_of(region))
    for (int w : members_of(region))
      for (int t3 : members_of(region)) {
        const int added[3] = {t1, w, t3};
        if (t1 == w || w == t3 || t1 == t3) continue;
        bool ok = true;
        for (int x = 0; x < 3 && ok; ++x) {
          if (added[x] == a || added[x] == b || added[x] == c) ok = false;
          for (int i = 0; i < 3 && ok; ++i) ok = g.adjacent(added[x], roots[i]) == k1_adjacent(3 + x, i);
          for (int y = x + 1; y < 3 && ok; ++y) ok = g.adjacent(added[x], added[y]) == k1_adjacent(3 + x, 3 + y);
        }
        if (ok) return true;
      }
  return false;
}

// Grows a graph around vertex 0 from random registry members, template
// gadgets over their vertices and sparse noise. Each piece is kept only if
// the graph stays below the density cap.
Graph planted_graph(std::mt19937_64& rng, const GSetRegistry& reg, int n, int copies, double noise, int gadgets = 0) {
  Graph g(n);
  auto try_add = [&](const std::vector<Edge>& edges) {
    Graph next = g;
    for (auto [x, y] : edges) next.add_edge(x, y);
    if (oracle::rho_max(next) < kCap) g = std::move(next);
  };
  for (int c = 0; c < copies; ++c) {
    const Graph& m = reg.members()[rng() % reg.members().size()].graph;
    if (m.order() > n) continue;
    auto perm = oracle::random_permutation(rng, n);
    std::swap(*std::find(perm.begin(), perm.end(), 0), perm[0]);
    std::vector<Edge> edges;
    for (auto [x, y] : m.edges()) edges.push_back({perm[x], perm[y]});
    try_add(edges);
  }
  for (int k = 0; k < gadgets; ++k) {
    const LabeledPair& t = templates().k(1 + static_cast<int>(rng() % 2));
    std::vector<int> used, free;
    for (int v = 0; v < n; ++v) (g.degree(v) > 0 ? used : free).push_back(v);
    if (static_cast<int>(used.size()) < t.roots || static_cast<int>(free.size()) < t.size() - t.roots) continue;
    std::shuffle(used.begin(), used.end(), rng);
    std::shuffle(free.begin(), free.end(), rng);
    std::vector<int> place(static_cast<size_t>(t.g.order()));
    for (int i = 0; i < t.size(); ++i) place[t.order[i]] = i < t.roots ? used[i] : free[i - t.roots];
    std::vector<Edge> edges;
    for (auto [x, y] : t.g.edges()) edges.push_back({place[x], place[y]});
    try_add(edges);
  }
  std::bernoulli_distribution coin(noise);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!g.adjacent(x, y) && coin(rng)) try_add({{x, y}});
  return g;
}

// Member m with one K2 gadget (new vertices c, d, e) over its vertices a and b.
Graph member_with_k2(const Graph& m, int a, int b) {
  const int n = m.order();
  Graph g(n + 3);
  for (auto [x, y] : m.edges()) g.add_edge(x, y);
  const int c = n, d = n + 1, e = n + 2;
  g.add_edge(a, c);
  g.add_edge(c, d);
  g.add_edge(d, b);
  g.add_edge(e, d);
  g.add_edge(e, c);
  return g;
}

size_t profile_weight(const ProfileTable& t) {
  size_t w = 0;
  for (const auto& [member, set] : t.profiles)
    for (const TVector& tv : set) w += tv.t[0].size() + tv.t[1].size();
  return w;
}

}  // namespace

TEST_CASE("templates classify as stated") {
  const NeutralTemplates& t = templates();
  CHECK(t.nu(1) == 3);
  CHECK(t.nu(2) == 2);
  CHECK(t.k1.size() - t.k1.roots == 3);
  CHECK(t.k2.size() - t.k2.roots == 3);
  CHECK(t.kstar.size() - t.kstar.roots == 1);
  auto root_mask = [](const LabeledPair& p) {
    uint64_t m = 0;
    for (int i = 0; i < p.roots; ++i) m |= uint64_t{1} << p.order[i];
    return m;
  };
  CHECK(oracle::classify(t.k1.g, full(t.k1.g.order()), root_mask(t.k1), kAlpha) == PairClass::Neutral);
  CHECK(oracle::classify(t.k2.g, full(t.k2.g.order()), root_mask(t.k2), kAlpha) == PairClass::Neutral);
  CHECK(oracle::classify(t.kstar.g, full(t.kstar.g.order()), root_mask(t.kstar), kAlpha) == PairClass::Rigid);
  for (int x = 0; x < 6; ++x)
    for (int y = x + 1; y < 6; ++y) CHECK(t.k1.g.adjacent(t.k1.order[x], t.k1.order[y]) == k1_adjacent(x, y));
  CHECK_THROWS_AS(t.k(3), PreconditionError);
}

TEST_CASE("neighbourhood_set examples") {
  const Graph k3 = Graph::complete(3);
  const std::pair<int, bool> both[] = {{0, true}, {1, true}};
  CHECK(neighbourhood_set(k3, both) == set_of(3, {2}));
  const Graph p3 = Graph::path(3);
  const std::pair<int, bool> ends[] = {{0, true}, {2, true}};
  CHECK(neighbourhood_set(p3, ends) == set_of(3, {1}));
  const std::pair<int, bool> against[] = {{0, true}, {1, false}};
  CHECK(neighbourhood_set(k3, against).empty());
  CHECK_FALSE(delta(k3, against));
  const std::pair<int, bool> twice[] = {{0, true}, {0, false}};
  CHECK_THROWS_AS(neighbourhood_set(k3, twice), PreconditionError);
}

TEST_CASE("zeta examples") {
  Graph g(6);
  for (int x = 0; x < 6; ++x)
    for (int y = x + 1; y < 6; ++y)
      if (k1_adjacent(x, y)) g.add_edge(x, y);
  const int roots[] = {0, 1, 2};
  CHECK(zeta(g, set_of(6, {0, 1, 2}), roots, 1));
  CHECK_FALSE(zeta(g, g.vertices(), roots, 1));
  Graph cut = g;
  cut.remove_edge(3, 4);
  CHECK_FALSE(zeta(cut, set_of(6, {0, 1, 2}), roots, 1));
  const int two[] = {0, 1};
  CHECK_THROWS_AS(zeta(g, set_of(6, {0, 1}), two, 1), PreconditionError);
}

TEST_CASE("specification examples") {
  // A single K1 copy in isolation has nothing outside it.
  Graph g(6);
  for (int x = 0; x < 6; ++x)
    for (int y = x + 1; y < 6; ++y)
      if (k1_adjacent(x, y)) g.add_edge(x, y);
  const int order[] = {0, 1, 2, 3, 4, 5};
  const std::string empty = specification(g, set_of(6, {0, 1, 2}), order, 1);
  CHECK(empty.size() == spec_domain(1).size());
  CHECK(empty.find('1') == std::string::npos);

  // Second-level K1 over (v4, v5, v6): new vertices 6, 7, 8.
  Graph h(9);
  for (auto [x, y] : g.edges()) h.add_edge(x, y);
  h.add_edge(6, 3);
  h.add_edge(7, 4);
  h.add_edge(8, 5);
  h.add_edge(6, 7);
  h.add_edge(7, 8);
  const std::string bits = specification(h, set_of(9, {0, 1, 2}), order, 1);
  const auto& domain = spec_domain(1);
  for (size_t i = 0; i < domain.size(); ++i) {
    const bool expected = zeta1_oracle(h, 0b111000000, order[domain[i][0] - 1], order[domain[i][1] - 1],
                                       order[domain[i][2] - 1]);
    CHECK(bits[i] == (expected ? '1' : '0'));
  }
  const auto at = [&](std::array<int, 3> t) {
    return bits[std::find(domain.begin(), domain.end(), t) - domain.begin()];
  };
  CHECK(at({4, 5, 6}) == '1');
  CHECK(at({6, 5, 4}) == '1');
  CHECK(at({4, 6, 5}) == '0');
  CHECK(std::count(bits.begin(), bits.end(), '1') == 2);

  for (const auto& t : spec_domain(2)) CHECK((t[0] > 2 || t[1] > 2 || t[2] > 2));
  CHECK(spec_domain(1).size() == 216 - 27);
  CHECK(spec_domain(2).size() == 125 - 8);
  const int wrong[] = {0, 1, 2, 3, 5, 4};
  CHECK_THROWS_AS(specification(h, set_of(9, {0, 1, 2}), wrong, 1), PreconditionError);
}

TEST_CASE("property: specifications agree with the zeta oracle") {
  std::mt19937_64 rng(51);
  const auto& domain = spec_domain(1);
  for (int it = 0; it < 40; ++it) {
    const int n = 9 + static_cast<int>(rng() % 3);
    Graph g = oracle::random_graph(rng, n, 0.3);
    // Force vertices 0..5 to be a strict K1 copy.
    for (int x = 0; x < 6; ++x)
      for (int y = x + 1; y < 6; ++y) {
        if (k1_adjacent(x, y)) g.add_edge(x, y);
        else g.remove_edge(x, y);
      }
    const int order[] = {0, 1, 2, 3, 4, 5};
    const std::string bits = specification(g, set_of(n, {0, 1, 2}), order, 1);
    const uint64_t region = full(n) & ~uint64_t{0b111111};
    for (size_t i = 0; i < domain.size(); ++i)
      CHECK(bits[i] == (zeta1_oracle(g, region, order[domain[i][0] - 1], order[domain[i][1] - 1],
                                     order[domain[i][2] - 1])
                            ? '1'
                            : '0'));
  }
}

TEST_CASE("find_u_bad examples") {
  const GSetRegistry& reg = small_registry();
  const GSetMember& base = reg.layer(0).front();

  const ProfileTable alone = find_u_bad(base.graph, 0, reg);
  REQUIRE(alone.u_bad.size() == 1);
  CHECK(alone.u_bad[0].vertices == base.graph.vertices());
  CHECK(alone.u_bad[0].layer == 0);

  // Extend the copy into a larger member: only the larger one stays u-bad.
  const GSetMember* larger = nullptr;
  for (const auto& m : reg.layer(1))
    if (m.chain.front().size() == base.graph.order() && oracle::isomorphic(
            induced_subgraph(m.graph, m.chain.front()).graph, base.graph, 0, 0)) {
      larger = &m;
      break;
    }
  REQUIRE(larger != nullptr);
  const ProfileTable grown = find_u_bad(larger->graph, 0, reg);
  REQUIRE(grown.u_bad.size() == 1);
  CHECK(grown.u_bad[0].vertices == larger->graph.vertices());
  CHECK(grown.u0 == VertexSet(larger->graph.order()));

  const Graph path = Graph::path(6);
  const ProfileTable none = find_u_bad(path, 2, reg);
  CHECK(none.u_bad.empty());
  CHECK(none.u0 == path.vertices());
  CHECK(profile(path, 2, reg).profiles.empty());
  CHECK_THROWS_AS(find_u_bad(path, 6, reg), PreconditionError);
  CHECK_THROWS_AS(find_u_bad(Graph(65), 0, reg), BoundError);
}

TEST_CASE("property: find_u_bad matches the definition") {
  const GSetRegistry& reg = small_registry();
  std::mt19937_64 rng(52);
  for (int it = 0; it < 30; ++it) {
    const int n = 5 + static_cast<int>(rng() % 3);
    const Graph g = planted_graph(rng, reg, n, 1 + static_cast<int>(rng() % 2), 0.15);
    const int u = static_cast<int>(rng() % 2) ? 0 : static_cast<int>(rng() % n);
    const ProfileTable t = find_u_bad(g, u, reg);
    CHECK(u_bad_found(t) == u_bad_oracle(g, u, reg));
    uint64_t covered = 0;
    for (const auto& ub : t.u_bad) {
      CHECK(ub.vertices.contains(u));
      covered |= ub.vertices.mask();
    }
    CHECK(t.u0.mask() == (full(n) & ~covered));
  }
}

TEST_CASE("profile examples") {
  const GSetRegistry& reg = small_registry();
  const GSetMember& base = reg.layer(0).front();
  const ProfileTable t = profile(base.graph, 0, reg);
  REQUIRE(t.profiles.size() == 1);
  const auto& [member, set] = *t.profiles.begin();
  CHECK(reg.members()[member].graph6 == base.graph6);
  REQUIRE(set.size() == 1);
  CHECK(set.begin()->t[0].empty());
  CHECK(set.begin()->t[1].empty());

  std::ostringstream os;
  t.write(os);
  CHECK(os.str().find("u_bad layer=0") != std::string::npos);
  CHECK(os.str().find("profile layer=0") != std::string::npos);
}

TEST_CASE("property: profiles are carried by isomorphisms") {
  const GSetRegistry& reg = small_registry();
  std::mt19937_64 rng(53);
  for (int it = 0; it < 30; ++it) {
    const int n = 6 + static_cast<int>(rng() % 4);
    const Graph g = planted_graph(rng, reg, n, 2, 0.1);
    const auto perm = oracle::random_permutation(rng, n);
    const Graph h = oracle::permute(g, perm);
    const int u = static_cast<int>(rng() % n);
    CHECK(profile(g, u, reg).profiles == profile(h, perm[u], reg).profiles);
  }
  // Two vertices swapped by an automorphism: the roots of two identical
  // copies joined by an edge.
  const Graph& m = reg.layer(0).front().graph;
  const int k = m.order();
  Graph twin(2 * k);
  for (auto [x, y] : m.edges()) {
    twin.add_edge(x, y);
    twin.add_edge(x + k, y + k);
  }
  twin.add_edge(0, k);
  CHECK(profile(twin, 0, reg).profiles == profile(twin, k, reg).profiles);
}

TEST_CASE("kt_star_neighbourhood examples") {
  // 0 and 1 share neighbour 2.
  const Graph v = Graph::from_edges(3, {{0, 2}, {1, 2}});
  CHECK(kt_star_neighbourhood(v, set_of(3, {0, 1}), 1) == set_of(3, {0, 1, 2}));

  // Chain of ticks: each vertex sees the two before it.
  const Graph chain = Graph::from_edges(5, {{0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(kt_star_neighbourhood(chain, set_of(5, {0, 1}), 1) == set_of(5, {0, 1, 2}));
  CHECK(kt_star_neighbourhood(chain, set_of(5, {0, 1}), 2) == set_of(5, {0, 1, 2, 3}));
  CHECK(kt_star_neighbourhood(chain, set_of(5, {0, 1}), -1) == chain.vertices());

  const Graph p = Graph::path(5);
  for (int k : {0, 1, 3, -1}) CHECK(kt_star_neighbourhood(p, set_of(5, {0, 4}), k) == set_of(5, {0, 4}));
  CHECK_THROWS_AS(kt_star_neighbourhood(p, VertexSet(5), 1), PreconditionError);
}

TEST_CASE("property: kt_star_neighbourhood is monotone and settles") {
  std::mt19937_64 rng(54);
  for (int it = 0; it < 200; ++it) {
    const int n = 3 + static_cast<int>(rng() % 20);
    const Graph g = oracle::random_graph(rng, n, 0.15);
    VertexSet seed(n);
    seed.insert(static_cast<int>(rng() % n));
    seed.insert(static_cast<int>(rng() % n));
    VertexSet previous = seed;
    for (int k = 1; k <= n; ++k) {
      const VertexSet w = kt_star_neighbourhood(g, seed, k);
      CHECK(previous.is_subset_of(w));
      previous = w;
    }
    CHECK(previous == kt_star_neighbourhood(g, seed, -1));
  }
}

TEST_CASE("kt_maximal examples") {
  const LabeledPair& tick = templates().kstar;
  const Graph p = Graph::path(3);
  CHECK(kt_maximal(p, set_of(3, {0, 1, 2}), set_of(3, {0}), tick).maximal);

  // G~ = {0, 1, 2}, H~ = {0}; vertex 3 ticks over {1, 2}.
  const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {3, 1}, {3, 2}});
  const KTMaximality r = kt_maximal(g, set_of(4, {0, 1, 2}), set_of(4, {0}), tick);
  CHECK_FALSE(r.maximal);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->k_new == std::vector<int>{3});
  std::vector<int> roots = r.witness->t_tilde;
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<int>{1, 2});

  // The same vertex also touching 0 lies next to G~ \ T~ and does not count.
  Graph h = g;
  h.add_edge(3, 0);
  CHECK(kt_maximal(h, set_of(4, {0, 1, 2}), set_of(4, {0}), tick).maximal);
  // Ticks over H~ alone do not count either.
  CHECK(kt_maximal(g, set_of(4, {0, 1, 2}), set_of(4, {1, 2}), tick).maximal);

  CHECK_THROWS_AS(kt_maximal(g, set_of(4, {0}), set_of(4, {0}), tick), PreconditionError);
  CHECK_THROWS_AS(kt_maximal(g, set_of(4, {0, 1}), set_of(4, {2}), tick), PreconditionError);
}

TEST_CASE("property: kt_maximal with the tick matches the definition") {
  const LabeledPair& tick = templates().kstar;
  std::mt19937_64 rng(55);
  for (int it = 0; it < 400; ++it) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(rng, n, 0.35);
    VertexSet gt(n), ht(n);
    for (int v = 0; v < n; ++v)
      if (rng() % 2) gt.insert(v);
    if (gt.size() < 2) continue;
    for (int v : gt)
      if (rng() % 2) ht.insert(v);
    bool expected = true;
    for (int a : gt)
      for (int b : gt) {
        if (a == b || (ht.contains(a) && ht.contains(b))) continue;
        for (int x = 0; x < n; ++x) {
          if (gt.contains(x) || !g.adjacent(x, a) || !g.adjacent(x, b)) continue;
          bool isolated = true;
          for (int y : gt)
            if (y != a && y != b && g.adjacent(x, y)) isolated = false;
          if (isolated) expected = false;
        }
      }
    CHECK(kt_maximal(g, gt, ht, tick).maximal == expected);
  }
}

TEST_CASE("kt_maximal beyond one bitset word") {
  const LabeledPair& tick = templates().kstar;
  Graph g = Graph::cycle(100);
  VertexSet gt(100), ht(100);
  gt.insert(10);
  gt.insert(12);
  ht.insert(10);
  CHECK_FALSE(kt_maximal(g, gt, ht, tick).maximal);  // vertex 11 ticks over {10, 12}
  g.add_edge(11, 50);
  gt.insert(50);
  CHECK(kt_maximal(g, gt, ht, tick).maximal);
}

TEST_CASE("build_witness examples") {
  const GSetRegistry& reg = small_registry();
  const WitnessResult trivial = build_witness(Graph::path(5), 2, reg);
  CHECK(trivial.z.order() == 1);
  CHECK(trivial.same_profiles);

  const Graph& m = reg.layer(0).front().graph;
  const WitnessResult copy = build_witness(m, 0, reg);
  CHECK(oracle::isomorphic(copy.z, m, copy.z1, 0));
  CHECK(copy.sparse);
  CHECK(copy.same_bad_set);
  CHECK(copy.same_profiles);

  // A K2 gadget over two non-root member vertices, nothing beyond it.
  const Graph a = member_with_k2(m, 1, 2);
  REQUIRE(oracle::rho_max(a) < kCap);
  const ProfileTable source = profile(a, 0, reg);
  REQUIRE(source.u_bad.size() == 1);
  const WitnessResult gadget = build_witness(a, 0, reg);
  CHECK(gadget.z.order() == m.order() + 3);
  CHECK(gadget.same_profiles);
  CHECK(gadget.same_bad_set);
  CHECK(gadget.sparse);

  CHECK_THROWS_AS(build_witness(Graph::complete(5), 0, reg), HypothesisError);
}

TEST_CASE("property: witnesses on planted graphs") {
  const GSetRegistry& reg = small_registry();
  std::mt19937_64 rng(56);
  int nontrivial = 0;
  for (int it = 0; it < 25; ++it) {
    const int n = 9 + static_cast<int>(rng() % 4);
    const Graph a = planted_graph(rng, reg, n, 2, 0.05, 2);
    const WitnessResult w = build_witness(a, 0, reg);
    CHECK(w.sparse);
    CHECK(w.rho == oracle::rho_max(w.z));
    CHECK(w.same_bad_set);
    CHECK(w.same_profiles);
    CHECK(profile(w.z, w.z1, reg).profiles == profile(a, 0, reg).profiles);
    nontrivial += profile_weight(w.source) > 0;
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("property: u-bad subgraphs meet only at u") {
  const GSetRegistry& reg = desk_registry();
  std::mt19937_64 rng(57);
  int with_two = 0;
  for (int it = 0; it < 60; ++it) {
    const int n = 6 + static_cast<int>(rng() % 5);
    const Graph g = planted_graph(rng, reg, n, 2, 0.1);
    for (int u = 0; u < n; ++u) {
      const ProfileTable t = find_u_bad(g, u, reg);
      CHECK(u_bad_pairwise_disjoint(t));
      with_two += t.u_bad.size() >= 2;
    }
  }
  CHECK(with_two > 0);
}
