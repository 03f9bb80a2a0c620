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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zol/canonical.hpp"
#include "zol/graph.hpp"
#include "zol/graph6.hpp"
#include "zol/rational.hpp"

namespace zol {

// Bounds for the layered bad-neighbourhood family. The defaults are a reduced
// desk-scale configuration; full_scale() gives the full bounds.
struct GSetParams {
  int v0_bound = 4;                    // cap on v(G,H) in layer 0
  std::vector<int> bad_bounds{3, 3, 3, 3};  // cap on v(K,T) for gamma = 1, 2, ...; the last entry repeats
  Rational density_cap{5, 3};
  // Full-size bounds are refused unless this is set.
  bool allow_infeasible = false;

  int bad_bound(int gamma) const;
  static GSetParams full_scale();

  // Throws PreconditionError on non-positive bounds and BudgetExceeded when the
  // bounds exceed the desk-scale limits without allow_infeasible.
  void validate(int layers) const;

  // Line-oriented key=value: v0_bound, bad_bounds (comma list), density_cap
  // (p/q), allow_infeasible (true/false). '#' starts a comment.
  static GSetParams parse(std::istream& is);
  static GSetParams load(const std::filesystem::path& path);
  void write(std::ostream& os) const;
};

// Largest per-step extension sizes accepted without allow_infeasible.
inline constexpr int kFeasibleV0Bound = 6;
inline constexpr int kFeasibleBadBound = 5;
inline constexpr int kMaxLayers = 5;

// (K, T) with T = k restricted to t_vertices is gamma-bad for root z.
// Throws PreconditionError when z is not in T or T is not a proper subset.
bool is_gamma_bad(const Graph& k, const VertexSet& t_vertices, int z, int gamma, const GSetParams& params);

struct GSetMember {
  // Relabeled to rooted canonical order; the root z is vertex 0.
  Graph graph;
  int layer = 0;
  Certificate certificate;
  std::string graph6;
  // chain[j] is V(G_j) for j = 0..layer; chain[layer] is every vertex.
  std::vector<VertexSet> chain;
  Rational f;    // f(G) = v(G) - 3/5 e(G)
  Rational rho;  // rho_max(G)
};

// Layer 0: one representative per rooted isomorphism class.
std::vector<GSetMember> enumerate_g0(const GSetParams& params);

class GSetRegistry {
 public:
  GSetRegistry() = default;
  GSetRegistry(GSetParams params, std::vector<std::vector<GSetMember>> layers);

  const GSetParams& params() const { return params_; }
  int max_layer() const { return static_cast<int>(layers_.size()) - 1; }
  // Members of layer i exactly as the layer definition produces them.
  const std::vector<GSetMember>& layer(int i) const { return layers_.at(static_cast<size_t>(i)); }
  // Members across all layers without repeated rooted isomorphism classes; a
  // class occurring in several layers is kept once, in its lowest layer.
  const std::vector<GSetMember>& members() const { return members_; }
  int kappa() const { return static_cast<int>(members_.size()); }

  // Index in members() of the rooted class of (g, root), if present.
  std::optional<int> find(const Graph& g, int root) const;

  // Directory with one rooted graph6 file per member of every layer, a
  // manifest and the parameters.
  void save(const std::filesystem::path& dir) const;
  static GSetRegistry load(const std::filesystem::path& dir);

 private:
  GSetParams params_;
  std::vector<std::vector<GSetMember>> layers_;
  std::vector<GSetMember> members_;
};

// Layers 0..layers (layers <= 5).
GSetRegistry enumerate_g(const GSetParams& params, int layers);

struct MemberReport {
  int layer = 0;
  int index = 0;  // position within the layer
  bool f_bound = false;       // f(G) <= 1 - layer/5
  bool density = false;       // rho_max(G) < density cap
  bool size = false;          // v(G) <= 1 + v0_bound + sum of bad bounds up to layer
  bool rigid_over_root = false;  // (G, {z}) rigid, required for layer >= 1
  bool connected = false;     // G - z connected
  bool chain = false;         // construction chain re-validates

  bool ok() const { return f_bound && density && size && rigid_over_root && connected && chain; }
};

struct GPropertyReport {
  std::vector<MemberReport> members;
  bool distinct_certificates = true;
  int failures() const;
};

GPropertyReport verify_g_properties(const GSetRegistry& reg);

// Extension joining two members glued at z. Vertices of the glued graph are
// numbered z = 0, then the non-root vertices of g1 in order, then those of
// g2; added vertices follow. Edges may join any of these vertices but must
// touch at least one added vertex.
struct Bridge {
  int added = 0;
  std::vector<Edge> edges;
};

struct GluedExtension {
  Graph k;  // root is vertex 0
  Rational rho;
  bool dense = false;   // rho_max(K) >= density cap
  bool member = false;  // K has a copy in the registry
  bool holds() const { return dense || member; }
};

// Builds K from g1, g2 (rooted at vertex 0) and the bridge, checks the
// bridge hypotheses (rigid over the glued graph, at most 5 added vertices,
// every added vertex reaches both g1 - z and g2 - z avoiding z) and evaluates
// the disjunction. Hypothesis failures throw PreconditionError.
GluedExtension check_glued_extension(const GSetRegistry& reg, const Graph& g1, const Graph& g2, const Bridge& bridge);

}  // namespace zol
