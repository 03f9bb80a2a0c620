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

#include <array>
#include <compare>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zol/graph.hpp"
#include "zol/gset.hpp"
#include "zol/rational.hpp"

namespace zol {

// u-bad search, profiles and witnesses are limited to 64 vertices. Extension
// search and (K,T)-maximality accept graphs of any order.
inline constexpr int kProfileVertexBound = 64;

// The fixed extension templates. Each is a labeled pair whose first `roots`
// listed vertices span T.
struct NeutralTemplates {
  // Roots (r1, r2, r3); new t1, w, t3 with edges t1r1, wr2, t3r3, t1w, wt3.
  LabeledPair k1;
  // Roots (a, b); new c, d, e with edges ac, cd, db, ed, ec.
  LabeledPair k2;
  // Roots (a, b); one new vertex adjacent to both.
  LabeledPair kstar;

  // Template j in {1, 2}.
  const LabeledPair& k(int j) const;
  int nu(int j) const { return k(j).roots; }
};

// Built once; throws Error if any template fails its 3/5 classification.
const NeutralTemplates& templates();

// Vertices outside the constraint list whose adjacency to each constraint
// vertex matches its polarity (true: adjacent). Throws PreconditionError on a
// repeated constraint vertex.
VertexSet neighbourhood_set(const Graph& g, std::span<const std::pair<int, bool>> constraints);
inline bool delta(const Graph& g, std::span<const std::pair<int, bool>> constraints) {
  return !neighbourhood_set(g, constraints).empty();
}

// Calls visit(new_vertices) for every (strict) generalised extension of the
// roots by `tmpl` whose new vertices lie in `allowed` and avoid the roots.
// new_vertices follows the template's order of non-root vertices. Enumeration
// stops when visit returns false.
void for_each_extension(const Graph& g, const LabeledPair& tmpl, std::span<const int> roots, const VertexSet& allowed,
                        bool strict, const std::function<bool(const std::vector<int>&)>& visit);

// 1 iff a strict generalised (K_j, T_j)-extension of the roots exists in g
// with V(g) \ (U \ roots) as the available region.
bool zeta(const Graph& g, const VertexSet& u, std::span<const int> roots, int j);

// Admissible index triples (1-based) for template j: all of [nu+3]^3 except
// those lying entirely in the root indices, in lexicographic order.
const std::vector<std::array<int, 3>>& spec_domain(int j);

// Specification bit string ('0'/'1' per spec_domain entry) of an extension
// given by its canonical order (roots then new vertices) over U.
std::string specification(const Graph& g, const VertexSet& u, std::span<const int> canonical_order, int j);

// T(U) = (T_1(U), T_2(U)); coordinates with no extensions are omitted.
// Keys are 1-based index tuples into the canonical order of U.
struct TVector {
  std::array<std::map<std::vector<int>, std::set<std::string>>, 2> t;

  friend bool operator==(const TVector&, const TVector&) = default;
  friend auto operator<=>(const TVector&, const TVector&) = default;
};

// T vector of U for one canonical order (order[k] is the vertex playing
// member vertex k).
TVector t_vector(const Graph& g, std::span<const int> order);

struct UBadSubgraph {
  int member = 0;  // index into GSetRegistry::members()
  int layer = 0;
  VertexSet vertices;
  // All canonical orders, sorted.
  std::vector<std::vector<int>> canonical_orders;
  // Filled by profile(): the smallest T over canonical orders and the order attaining it.
  TVector t;
  std::vector<int> best_order;
};

struct ProfileTable {
  int u = 0;
  std::vector<UBadSubgraph> u_bad;
  VertexSet u0;
  // J^i(u) for members i with a u-bad copy.
  std::map<int, std::set<TVector>> profiles;

  void write(std::ostream& os) const;
};

// u-bad subgraphs and the 0-neighbourhood of u.
ProfileTable find_u_bad(const Graph& g, int u, const GSetRegistry& reg);
// find_u_bad plus every i-profile.
ProfileTable profile(const Graph& g, int u, const GSetRegistry& reg);

// True when any two u-bad subgraphs share only u.
bool u_bad_pairwise_disjoint(const ProfileTable& table);

// W_order starting from the seed (order < 0 means the fixpoint): repeatedly
// add every vertex with at least two neighbours in the current set.
VertexSet kt_star_neighbourhood(const Graph& g, const VertexSet& seed, int order);

struct KTViolation {
  std::vector<int> t_tilde;  // ordered like the template roots
  std::vector<int> k_new;    // ordered like the template's new vertices
};

struct KTMaximality {
  bool maximal = true;
  std::optional<KTViolation> witness;
};

// (G~, H~)-maximality with respect to the template (K, T).
KTMaximality kt_maximal(const Graph& g, const VertexSet& g_tilde, const VertexSet& h_tilde, const LabeledPair& tmpl);

struct WitnessResult {
  Graph z;
  int z1 = 0;
  // Vertex sets of the member copies built for each profile entry.
  std::vector<VertexSet> copies;
  ProfileTable source;  // profile of x1 in A
  ProfileTable built;   // profile of z1 in Z
  Rational rho;         // rho_max(Z)
  bool sparse = false;        // rho_max(Z) < 5/3
  bool same_bad_set = false;  // u-bad subgraphs of z1 are exactly the copies
  bool same_profiles = false; // J^i(x1) = J^i(z1) for all i
};

// Builds the witness graph Z for vertex x1 of A. Throws HypothesisError when
// rho_max(A) >= 5/3 and BoundError when a graph exceeds the profile bound.
WitnessResult build_witness(const Graph& a, int x1, const GSetRegistry& reg);

}  // namespace zol
