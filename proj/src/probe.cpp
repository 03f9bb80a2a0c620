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

#include "zol/probe.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "zol/ef_game.hpp"
#include "zol/errors.hpp"
#include "zol/ext_calculus.hpp"
#include "zol/parallel.hpp"
#include "zol/profiles.hpp"

namespace zol {
namespace {

constexpr double kZ95 = 1.959963984540054;

uint64_t mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// splitmix64 stream.
class Stream {
 public:
  explicit Stream(uint64_t seed) : state_(seed) {}
  uint64_t next() { return mix(state_++ * 0x9e3779b97f4a7c15ULL); }
  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  uint64_t below(uint64_t bound) {
    const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound);
    uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

 private:
  uint64_t state_;
};

double edge_probability(int n, const Rational& alpha) {
  if (n < 1) throw PreconditionError("sample order must be positive");
  return std::exp(-alpha.to_double() * std::log(static_cast<double>(n)));
}

std::string cell_name(const GridCell& c) {
  std::string s = "alpha=" + c.alpha.str() + " n=" + std::to_string(c.n);
  if (c.m) s += " m=" + std::to_string(c.m);
  return s;
}

void check_budget(const GridCell& cell, double per_sample, const ProbeOptions& options) {
  const double total = per_sample * options.samples;
  if (!(total <= options.budget)) {
    std::ostringstream os;
    os << "cell " << cell_name(cell) << ": estimated " << std::scientific << std::setprecision(2) << total
       << " operations exceeds budget " << options.budget;
    throw BudgetExceeded(os.str());
  }
}

double sampling_cost(int n) { return static_cast<double>(n) * n / 64.0 + n; }

// Runs trial(cell_index, sample_index) for every sample of every cell.
template <typename Trial>
std::vector<ProbeResult> run_cells(const std::vector<GridCell>& grid, const ProbeOptions& options, Trial&& trial) {
  if (options.samples < 1) throw PreconditionError("probe needs at least one sample per cell");
  std::vector<ProbeResult> out;
  const int threads = options.threads > 0 ? options.threads : default_threads();
  for (size_t c = 0; c < grid.size(); ++c) {
    std::vector<char> hit(static_cast<size_t>(options.samples), 0);
    parallel_for(hit.size(), [&](size_t s) { hit[s] = trial(c, s) ? 1 : 0; }, threads);
    int successes = 0;
    for (char h : hit) successes += h;
    out.push_back(make_result(grid[c], options.samples, successes));
  }
  return out;
}

// Pivoting Bron-Kerbosch on candidates p, all adjacent to the current clique.
bool extend_clique(const Graph& g, std::vector<int>& p, int need) {
  if (need <= 0) return true;
  if (static_cast<int>(p.size()) < need) return false;
  if (need == 1) return true;
  int pivot = p[0];
  int best = -1;
  for (int u : p) {
    int c = 0;
    for (int w : p) c += g.adjacent(u, w);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  std::vector<int> branch;
  for (int v : p)
    if (!g.adjacent(pivot, v)) branch.push_back(v);
  for (int v : branch) {
    std::vector<int> next;
    for (int w : p)
      if (g.adjacent(v, w)) next.push_back(w);
    if (extend_clique(g, next, need - 1)) return true;
    p.erase(std::find(p.begin(), p.end(), v));
    if (static_cast<int>(p.size()) < need) return false;
  }
  return false;
}

bool connected_to_roots(const Graph& g, const VertexSet& roots) {
  return reachable(g, roots, g.vertices()) == g.vertices();
}

}  // namespace

double SampleSpec::p() const { return edge_probability(n, alpha); }

uint64_t stream_seed(uint64_t master, uint64_t cell, uint64_t sample) {
  return mix(mix(mix(master) ^ cell) + sample);
}

Graph sample_p(int n, double p, uint64_t seed, SampleMode mode) {
  if (n < 0) throw PreconditionError("sample order must be non-negative");
  if (n > kMaxSampleOrder)
    throw BoundError("sample order " + std::to_string(n) + " exceeds " + std::to_string(kMaxSampleOrder));
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("edge probability must lie in [0, 1]");
  Graph g(n);
  if (p == 0.0 || n < 2) return g;
  if (p == 1.0) return Graph::complete(n);
  Stream rng(seed);
  if (mode == SampleMode::Auto) mode = p < 0.25 ? SampleMode::Skip : SampleMode::Bernoulli;
  if (mode == SampleMode::Bernoulli) {
    for (int v = 1; v < n; ++v)
      for (int w = 0; w < v; ++w)
        if (rng.uniform() < p) g.add_edge(w, v);
    return g;
  }
  // Gaps between present pairs are geometric with parameter p.
  const double lq = std::log1p(-p);
  int64_t v = 1;
  int64_t w = -1;
  while (v < n) {
    const double r = 1.0 - rng.uniform();  // (0, 1]
    const double gap = std::floor(std::log(r) / lq);
    w += 1 + static_cast<int64_t>(std::min(gap, 1e15));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) g.add_edge(static_cast<int>(w), static_cast<int>(v));
  }
  return g;
}

Graph sample(const SampleSpec& spec, SampleMode mode) {
  const double p = spec.p();
  if (!(p > 0.0 && p <= 1.0)) throw PreconditionError("n^-alpha must lie in (0, 1]; alpha must be non-negative");
  return sample_p(spec.n, p, spec.seed, mode);
}

bool has_clique(const Graph& g, int k) {
  if (k <= 0) return true;
  if (k == 1) return g.order() > 0;
  if (k == 2) return g.size() > 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < k - 1) continue;
    std::vector<int> p;
    for (int w : g.neighbours(v))
      if (w > v && g.degree(w) >= k - 1) p.push_back(w);
    if (extend_clique(g, p, k - 1)) return true;
  }
  return false;
}

std::vector<GridCell> read_grid(std::istream& is) {
  std::vector<GridCell> out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string alpha;
    if (!(ls >> alpha)) continue;
    GridCell cell;
    try {
      cell.alpha = Rational::parse(alpha);
    } catch (const ParseError&) {
      throw ParseError("invalid alpha '" + alpha + "'", line_no, 1);
    }
    if (!(ls >> cell.n) || cell.n < 1) throw ParseError("expected a positive vertex count", line_no, 1);
    if (!(ls >> cell.m)) cell.m = 0;
    std::string extra;
    if (ls.clear(), ls >> extra) throw ParseError("unexpected '" + extra + "'", line_no, 1);
    if (cell.alpha.sign() <= 0) throw ParseError("alpha must be positive", line_no, 1);
    out.push_back(cell);
  }
  return out;
}

std::vector<GridCell> load_grid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open grid file " + path.string());
  return read_grid(in);
}

double wilson_halfwidth(int samples, int successes) {
  if (samples < 1) throw PreconditionError("half-width needs at least one sample");
  const double m = samples;
  const double ph = successes / m;
  const double z2 = kZ95 * kZ95;
  return kZ95 / (1.0 + z2 / m) * std::sqrt(ph * (1.0 - ph) / m + z2 / (4.0 * m * m));
}

ProbeResult make_result(const GridCell& cell, int samples, int successes) {
  if (successes < 0 || successes > samples) throw PreconditionError("success count out of range");
  ProbeResult r;
  r.cell = cell;
  r.samples = samples;
  r.successes = successes;
  r.phat = static_cast<double>(successes) / samples;
  r.halfwidth = wilson_halfwidth(samples, successes);
  return r;
}

void write_csv(std::ostream& os, const std::vector<ProbeResult>& results) {
  os << "alpha_num,alpha_den,n,m,samples,successes,phat,halfwidth\n";
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << std::fixed << std::setprecision(6);
  for (const auto& r : results)
    os << r.cell.alpha.num() << ',' << r.cell.alpha.den() << ',' << r.cell.n << ',' << r.cell.m << ',' << r.samples
       << ',' << r.successes << ',' << r.phat << ',' << r.halfwidth << '\n';
  os.flags(flags);
  os.precision(precision);
}

Detector Detector::formula(Formula f) {
  Detector d;
  d.sentence = std::move(f);
  return d;
}

Detector Detector::clique_of(int k) {
  if (k < 1) throw PreconditionError("clique size must be positive");
  Detector d;
  d.clique = k;
  return d;
}

std::string Detector::name() const {
  if (sentence) return to_string(*sentence);
  return "K" + std::to_string(clique);
}

bool Detector::operator()(const Graph& g) const {
  if (sentence) return evaluate(*sentence, g);
  return has_clique(g, clique);
}

double Detector::cost(int n, double p) const {
  if (sentence) return std::pow(static_cast<double>(n), sentence->depth()) * 4.0;
  const double d = std::max(1.0, n * p);
  return 2.0 * sampling_cost(n) + n * std::pow(d, clique - 1);
}

std::vector<ProbeResult> probe_sentence(const Detector& detector, const std::vector<GridCell>& grid,
                                        const ProbeOptions& options) {
  for (const auto& cell : grid) {
    if (cell.n > kMaxSampleOrder) throw BudgetExceeded("cell " + cell_name(cell) + ": order exceeds sampler bound");
    check_budget(cell, sampling_cost(cell.n) + detector.cost(cell.n, edge_probability(cell.n, cell.alpha)), options);
  }
  return run_cells(grid, options, [&](size_t c, size_t s) {
    const GridCell& cell = grid[c];
    return detector(sample({cell.n, cell.alpha, stream_seed(options.seed, c, s)}));
  });
}

std::vector<ProbeResult> probe_ehr(const std::vector<GridCell>& grid, int k, const ProbeOptions& options) {
  if (k < 0) throw PreconditionError("round count must be non-negative");
  for (const auto& cell : grid) {
    const int m = cell.m > 0 ? cell.m : cell.n;
    const int limit = k <= 3 ? kEhrOrderK3 : k == 4 ? kEhrOrderK4 : 0;
    if (std::max(cell.n, m) > limit)
      throw BudgetExceeded("cell " + cell_name(cell) + ": exact game solving with k=" + std::to_string(k) +
                           " is limited to " + std::to_string(limit) + " vertices");
  }
  return run_cells(grid, options, [&](size_t c, size_t s) {
    const GridCell& cell = grid[c];
    const int m = cell.m > 0 ? cell.m : cell.n;
    const Graph x = sample({cell.n, cell.alpha, stream_seed(options.seed, c, 2 * s)});
    const Graph y = sample({m, cell.alpha, stream_seed(options.seed, c, 2 * s + 1)});
    return solve(x, y, k).winner == Player::Duplicator;
  });
}

LabeledPair label_pair(const RootedPair& pair) {
  LabeledPair out;
  out.g = pair.g;
  for (int v : pair.h) out.order.push_back(v);
  out.roots = static_cast<int>(out.order.size());
  for (int v = 0; v < pair.g.order(); ++v)
    if (!pair.h.contains(v)) out.order.push_back(v);
  return out;
}

std::vector<ProbeResult> probe_maximal_extension(const RootedPair& pair, const LabeledPair& tmpl,
                                                 const std::vector<GridCell>& grid, const ProbeOptions& options) {
  if (pair.h.empty() || !connected_to_roots(pair.g, pair.h))
    throw PreconditionError("pair: every vertex outside H must be connected to H");
  VertexSet t_roots(tmpl.g.order());
  for (int i = 0; i < tmpl.roots; ++i) t_roots.insert(tmpl.order[i]);
  if (tmpl.roots < 1 || tmpl.size() == tmpl.roots || !connected_to_roots(tmpl.g, t_roots))
    throw PreconditionError("template: every new vertex must be connected to the roots");
  if (tmpl.roots > pair.g.order()) throw PreconditionError("template has more roots than the pair has vertices");
  for (const auto& cell : grid) {
    const PairClass kind = classify_pair(pair, cell.alpha).kind;
    if (kind != PairClass::Safe)
      throw PreconditionError("pair is not " + cell.alpha.str() + "-safe");
    check_budget(cell, 4.0 * sampling_cost(cell.n), options);
  }
  const LabeledPair labeled = label_pair(pair);
  const int r = labeled.roots;
  return run_cells(grid, options, [&](size_t c, size_t s) {
    const GridCell& cell = grid[c];
    const uint64_t seed = stream_seed(options.seed, c, s);
    const Graph g = sample({cell.n, cell.alpha, seed});
    if (g.order() < r) return false;
    Stream pick(mix(seed ^ 0x5851f42d4c957f2dULL));
    std::vector<int> roots;
    while (static_cast<int>(roots.size()) < r) {
      const int v = static_cast<int>(pick.below(static_cast<uint64_t>(g.order())));
      if (std::find(roots.begin(), roots.end(), v) == roots.end()) roots.push_back(v);
    }
    const VertexSet h_tilde(g.order(), std::span<const int>(roots));
    bool found = false;
    for_each_extension(g, labeled, roots, g.vertices(), true, [&](const std::vector<int>& added) {
      VertexSet g_tilde = h_tilde;
      for (int v : added) g_tilde.insert(v);
      found = kt_maximal(g, g_tilde, h_tilde, tmpl).maximal;
      return !found;
    });
    return found;
  });
}

}  // namespace zol
