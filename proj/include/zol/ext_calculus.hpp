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

#include <optional>
#include <string>

#include "zol/graph.hpp"
#include "zol/rational.hpp"

namespace zol {

inline constexpr int kDefaultClassifyBound = 12;
inline constexpr int kBruteForceDensityBound = 25;

enum class PairClass { Safe, Rigid, Neutral, None };
std::string to_string(PairClass c);

struct Classification {
  PairClass kind = PairClass::None;
  // For PairClass::None: an intermediate vertex set S (H ⊆ S ⊆ G) refuting every
  // class. When f(G,H) > 0 it has f(S,H) <= 0; when f(G,H) = 0 it is a proper
  // intermediate with f(S,H) <= 0; when f(G,H) < 0 it has f(G,S) >= 0.
  std::optional<VertexSet> witness;
  Rational f_total;  // f_alpha(G,H)
};

// v(G,H) - alpha * e(G,H).
Rational f_alpha(const RootedPair& pair, const Rational& alpha);
// Same quantity for the induced pair (host[outer], host[inner]); inner ⊆ outer.
Rational f_alpha(const Graph& host, const VertexSet& outer, const VertexSet& inner, const Rational& alpha);

// Exhaustive over all 2^{v(G,H)} intermediate sets. Throws BoundError when
// v(G,H) > bound and PreconditionError when H = G or alpha <= 0.
Classification classify_pair(const RootedPair& pair, const Rational& alpha, int bound = kDefaultClassifyBound);
Classification classify_pair(const Graph& host, const VertexSet& outer, const VertexSet& inner,
                             const Rational& alpha, int bound = kDefaultClassifyBound);

// max over nonempty induced subgraphs of e/v, by subset enumeration.
Rational rho_max_bruteforce(const Graph& g);

struct DensestSubgraph {
  Rational density;
  VertexSet vertices;
};

// Exact maximum-density subgraph via min-cut feasibility tests over the finite
// set of candidate densities e/v.
DensestSubgraph densest_subgraph(const Graph& g);
inline Rational rho_max_flow(const Graph& g) { return densest_subgraph(g).density; }

// Classification of (G', H) for nested H ⊂ G ⊂ G' given as vertex sets of gprime.
Classification compose_rigid(const Graph& gprime, const VertexSet& g, const VertexSet& h, const Rational& alpha);

// Re-checks the safe-extension composition statement: W ⊂ U ⊆ V(g), (G,U)
// neutral, (U,W) safe (or W empty with rho_max(U) < 1/alpha), and an edge
// between V(G)\U and U\W. Throws HypothesisError if any hypothesis fails;
// otherwise returns whether (G,W) classifies as safe.
bool safe_composition_holds(const Graph& g, const VertexSet& u, const VertexSet& w, const Rational& alpha);

}  // namespace zol
