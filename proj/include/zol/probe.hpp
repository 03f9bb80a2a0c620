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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zol/fo.hpp"
#include "zol/graph.hpp"
#include "zol/rational.hpp"

namespace zol {

// Largest order the sampler accepts (adjacency is n^2 bits).
inline constexpr int kMaxSampleOrder = 50000;

struct SampleSpec {
  int n = 0;
  Rational alpha{1};
  uint64_t seed = 0;

  // n^{-alpha} as exp(-alpha ln n).
  double p() const;
};

enum class SampleMode { Auto, Skip, Bernoulli };

// G(n, p) with pairs visited in the order (0,1), (0,2), (1,2), (0,3), ...
// Skip mode jumps geometric gaps between present pairs; Bernoulli mode draws
// every pair. Auto picks Skip for p < 1/4. Throws PreconditionError unless
// 0 <= p <= 1 and BoundError for n above kMaxSampleOrder.
Graph sample_p(int n, double p, uint64_t seed, SampleMode mode = SampleMode::Auto);
Graph sample(const SampleSpec& spec, SampleMode mode = SampleMode::Auto);

// Per-sample stream seed; independent of evaluation order.
uint64_t stream_seed(uint64_t master, uint64_t cell, uint64_t sample);

// Existence of a k-clique (Bron-Kerbosch with pivoting, stopping at the first
// clique of size k).
bool has_clique(const Graph& g, int k);

struct GridCell {
  Rational alpha{1};
  int n = 0;
  int m = 0;  // second graph order for game probes; 0 elsewhere
};

// Lines "alpha n [m]" with alpha as p/q; '#' starts a comment.
std::vector<GridCell> read_grid(std::istream& is);
std::vector<GridCell> load_grid(const std::filesystem::path& path);

struct ProbeResult {
  GridCell cell;
  int samples = 0;
  int successes = 0;
  double phat = 0;
  // Wilson score 95% half-width, z = 1.959963984540054:
  // z / (1 + z^2/M) * sqrt(phat (1 - phat) / M + z^2 / (4 M^2)).
  double halfwidth = 0;
};

ProbeResult make_result(const GridCell& cell, int samples, int successes);
double wilson_halfwidth(int samples, int successes);

// Header alpha_num,alpha_den,n,m,samples,successes,phat,halfwidth; doubles
// printed with 6 decimals.
void write_csv(std::ostream& os, const std::vector<ProbeResult>& results);

struct ProbeOptions {
  int samples = 100;
  uint64_t seed = 1;
  int threads = 0;  // 0: hardware concurrency
  // Estimated elementary operations allowed per cell.
  double budget = 2e11;
};

// Either an FO sentence (evaluated exactly) or a clique detector.
struct Detector {
  std::optional<Formula> sentence;
  int clique = 0;

  static Detector formula(Formula f);
  static Detector clique_of(int k);
  std::string name() const;
  bool operator()(const Graph& g) const;
  // Rough operation count for one sample of order n at edge probability p.
  double cost(int n, double p) const;
};

// Each cell draws `samples` graphs; cells whose estimated cost exceeds the
// budget throw BudgetExceeded before any sampling.
std::vector<ProbeResult> probe_sentence(const Detector& detector, const std::vector<GridCell>& grid,
                                        const ProbeOptions& options);

// Largest orders accepted by the game probe for k <= 3 and k = 4.
inline constexpr int kEhrOrderK3 = 30;
inline constexpr int kEhrOrderK4 = 14;

// Fraction of sample pairs (X of order n, Y of order m) where Duplicator
// wins the k-round game.
std::vector<ProbeResult> probe_ehr(const std::vector<GridCell>& grid, int k, const ProbeOptions& options);

// Fraction of samples in which a uniformly random ordered root tuple has a
// strict extension by the pair that is maximal for the template. The pair
// must be safe at each cell's alpha (rigid or neutral pairs throw
// PreconditionError), and every non-root vertex of the pair and template
// must be connected to the roots.
std::vector<ProbeResult> probe_maximal_extension(const RootedPair& pair, const LabeledPair& tmpl,
                                                 const std::vector<GridCell>& grid, const ProbeOptions& options);

// Pair (G, H) as a labeled pair with H's vertices first.
LabeledPair label_pair(const RootedPair& pair);

}  // namespace zol
