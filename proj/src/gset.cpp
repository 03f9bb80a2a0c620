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

#include "zol/gset.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "zol/errors.hpp"
#include "zol/ext_calculus.hpp"
#include "zol/parallel.hpp"

namespace zol {
namespace {

const Rational kAlpha(3, 5);

// Large enough for every pair the enumeration can produce at desk scale.
constexpr int kClassifyBound = 30;

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

int parse_int(const std::string& s, const std::string& key) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("invalid integer '" + s + "' for " + key, 1, 1);
  }
}

Rational rho_max(const Graph& g) {
  return g.order() <= kBruteForceDensityBound ? rho_max_bruteforce(g) : rho_max_flow(g);
}

Rational f_of(const Graph& g) { return Rational(g.order()) - kAlpha * Rational(g.size()); }

// Every vertex of `from` reaches `targets` inside g - z.
bool reaches(const Graph& g, const VertexSet& from, const VertexSet& targets, int z) {
  VertexSet within = g.vertices();
  within.erase(z);
  const VertexSet hit = reachable(g, targets, within);
  return from.is_subset_of(hit);
}

struct Candidate {
  Graph graph;
  Certificate certificate;
  std::vector<VertexSet> chain;
};

// Relabels g into rooted canonical order (root 0 stays first) and maps the chain.
Candidate canonicalise(const Graph& g, const std::vector<VertexSet>& chain) {
  std::vector<int> colours(static_cast<size_t>(g.order()), 1);
  colours[0] = 0;
  CanonicalLabeling lab = canonical_labeling(g, colours, kMaxCanonicalBound);
  std::vector<int> pos(lab.labeling.size());
  for (size_t i = 0; i < lab.labeling.size(); ++i) pos[lab.labeling[i]] = static_cast<int>(i);
  Candidate c{g.relabel(pos), lab.certificate, {}};
  for (const VertexSet& s : chain) {
    VertexSet t(g.order());
    for (int v : s) t.insert(pos[v]);
    c.chain.push_back(t);
  }
  return c;
}

// Calls visit(edge_set) for every e-subset of `pairs`, given as index vectors.
template <typename Visit>
void for_each_combination(int total, int e, Visit&& visit) {
  if (e > total || e < 0) return;
  std::vector<int> idx(static_cast<size_t>(e));
  for (int i = 0; i < e; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int i = e - 1;
    while (i >= 0 && idx[i] == total - e + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < e; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// All extensions of `base` (root 0) by 1..max_new vertices satisfying the
// layer conditions, deduplicated by rooted class. Layer 0 extends the single
// root vertex.
std::vector<Candidate> extend(const Graph& base, const std::vector<VertexSet>& base_chain, int layer,
                              int max_new, const GSetParams& params) {
  const int n0 = base.order();
  const int64_t e0 = base.size();
  const int64_t cap_p = params.density_cap.num();
  const int64_t cap_q = params.density_cap.den();
  std::map<Certificate, Candidate> found;

  for (int b = 1; b <= max_new; ++b) {
    const int n = n0 + b;
    std::vector<Edge> pairs;
    for (int i = n0; i < n; ++i) {
      for (int u = 0; u < n0; ++u) pairs.emplace_back(u, i);
      for (int j = n0; j < i; ++j) pairs.emplace_back(j, i);
    }
    // f over the base is 5b - 3e in fifths: layer 0 needs <= 0, later layers < 0.
    const int64_t e_min = layer == 0 ? (5 * b + 2) / 3 : (5 * b) / 3 + 1;
    // Whole-graph density below the cap: (e0 + e) * q < p * n.
    int64_t e_max = (cap_p * n - 1) / cap_q - e0;
    e_max = std::min<int64_t>(e_max, static_cast<int64_t>(pairs.size()));
    VertexSet base_set = VertexSet::full(n0);
    base_set = VertexSet(n, std::span<const int>(base_set.to_vector()));
    VertexSet added(n);
    for (int i = n0; i < n; ++i) added.insert(i);
    VertexSet targets = base_set;
    targets.erase(0);

    for (int64_t e = e_min; e <= e_max; ++e) {
      for_each_combination(static_cast<int>(pairs.size()), static_cast<int>(e), [&](const std::vector<int>& idx) {
        std::vector<int> deg(static_cast<size_t>(b), 0);
        for (int k : idx) {
          auto [u, v] = pairs[k];
          if (u >= n0) ++deg[u - n0];
          ++deg[v - n0];
        }
        // Each added vertex needs two edges, else removing it breaks both classes.
        for (int d : deg)
          if (d < 2) return;
        Graph g(n);
        for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
        for (int k : idx) g.add_edge(pairs[k].first, pairs[k].second);

        if (layer == 0) {
          VertexSet rest = g.vertices();
          rest.erase(0);
          if (!is_connected(g, rest)) return;
          const PairClass kind = classify_pair(g, g.vertices(), VertexSet(n, {0}), kAlpha, kClassifyBound).kind;
          if (kind != PairClass::Neutral && kind != PairClass::Rigid) return;
        } else {
          if (!reaches(g, added, targets, 0)) return;
          if (classify_pair(g, g.vertices(), base_set, kAlpha, kClassifyBound).kind != PairClass::Rigid) return;
        }
        std::vector<VertexSet> chain;
        for (const VertexSet& s : base_chain) chain.push_back(VertexSet(n, std::span<const int>(s.to_vector())));
        chain.push_back(g.vertices());
        Candidate c = canonicalise(g, chain);
        found.try_emplace(c.certificate, std::move(c));
      });
    }
  }
  std::vector<Candidate> out;
  for (auto& [cert, c] : found) out.push_back(std::move(c));
  return out;
}

// Merges per-base candidate lists in base order, keeping the first
// representative of each class, then applies the density cap.
std::vector<GSetMember> finish_layer(std::vector<std::vector<Candidate>> per_base, int layer,
                                     const GSetParams& params) {
  std::map<Certificate, Candidate> merged;
  for (auto& list : per_base)
    for (auto& c : list) merged.try_emplace(c.certificate, std::move(c));
  std::vector<Candidate> flat;
  for (auto& [cert, c] : merged) flat.push_back(std::move(c));
  std::vector<std::optional<GSetMember>> built(flat.size());
  parallel_for(flat.size(), [&](size_t i) {
    Rational rho = rho_max(flat[i].graph);
    if (!(rho < params.density_cap)) return;
    GSetMember m;
    m.graph = flat[i].graph;
    m.layer = layer;
    m.certificate = flat[i].certificate;
    m.graph6 = to_graph6(m.graph);
    m.chain = flat[i].chain;
    m.f = f_of(m.graph);
    m.rho = rho;
    built[i] = std::move(m);
  });
  std::vector<GSetMember> out;
  for (auto& m : built)
    if (m) out.push_back(std::move(*m));
  std::sort(out.begin(), out.end(), [](const GSetMember& a, const GSetMember& b) {
    return a.graph6 != b.graph6 ? a.graph6 < b.graph6 : a.certificate < b.certificate;
  });
  return out;
}

}  // namespace

int GSetParams::bad_bound(int gamma) const {
  if (gamma < 1) throw PreconditionError("bad_bound: gamma must be positive");
  if (bad_bounds.empty()) throw PreconditionError("bad_bound: no bounds configured");
  return bad_bounds[std::min<size_t>(static_cast<size_t>(gamma - 1), bad_bounds.size() - 1)];
}

GSetParams GSetParams::full_scale() {
  GSetParams p;
  p.v0_bound = 10;
  p.bad_bounds = {15, 30, 60};
  return p;
}

void GSetParams::validate(int layers) const {
  if (v0_bound < 1) throw PreconditionError("v0_bound must be positive");
  if (bad_bounds.empty()) throw PreconditionError("bad_bounds must be non-empty");
  for (int b : bad_bounds)
    if (b < 1) throw PreconditionError("bad bounds must be positive");
  if (density_cap.sign() <= 0) throw PreconditionError("density cap must be positive");
  if (layers < 0 || layers > kMaxLayers)
    throw PreconditionError("layers must be in 0.." + std::to_string(kMaxLayers));
  int total = 1 + v0_bound;
  bool heavy = v0_bound > kFeasibleV0Bound;
  for (int g = 1; g <= layers; ++g) {
    total += bad_bound(g);
    heavy = heavy || bad_bound(g) > kFeasibleBadBound;
  }
  if (total > kMaxCanonicalBound)
    throw BoundError("members could reach " + std::to_string(total) + " vertices; the limit is " +
                     std::to_string(kMaxCanonicalBound));
  if (heavy && !allow_infeasible) {
    // Layer 0 alone scans about C(v(v+1)/2, 5v/3) edge sets for v = v0_bound.
    throw BudgetExceeded("bounds exceed the desk-scale limits (v0_bound <= " + std::to_string(kFeasibleV0Bound) +
                         ", bad bounds <= " + std::to_string(kFeasibleBadBound) +
                         "); the number of candidate edge sets grows like C(v^2/2, 5v/3) in the extension size v. "
                         "Set allow_infeasible to run anyway");
  }
}

GSetParams GSetParams::parse(std::istream& is) {
  GSetParams p;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", line_no, 1);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "v0_bound") {
        p.v0_bound = parse_int(value, key);
      } else if (key == "bad_bounds") {
        p.bad_bounds.clear();
        for (const auto& item : split(value, ',')) p.bad_bounds.push_back(parse_int(item, key));
      } else if (key == "density_cap") {
        p.density_cap = Rational::parse(value);
      } else if (key == "allow_infeasible") {
        if (value != "true" && value != "false") throw ParseError("expected true or false", 1, 1);
        p.allow_infeasible = value == "true";
      } else {
        throw ParseError("unknown key '" + key + "'", 1, 1);
      }
    } catch (const ParseError& e) {
      std::string msg = e.what();
      throw ParseError(msg.substr(msg.find(": ") + 2), line_no, static_cast<int>(eq) + 2);
    }
  }
  return p;
}

GSetParams GSetParams::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse(in);
}

void GSetParams::write(std::ostream& os) const {
  os << "v0_bound=" << v0_bound << "\nbad_bounds=";
  for (size_t i = 0; i < bad_bounds.size(); ++i) os << (i ? "," : "") << bad_bounds[i];
  os << "\ndensity_cap=" << density_cap << "\nallow_infeasible=" << (allow_infeasible ? "true" : "false") << "\n";
}

bool is_gamma_bad(const Graph& k, const VertexSet& t_vertices, int z, int gamma, const GSetParams& params) {
  if (!t_vertices.contains(z)) throw PreconditionError("is_gamma_bad: root is not in T");
  if (!t_vertices.is_subset_of(k.vertices()) || t_vertices == k.vertices())
    throw PreconditionError("is_gamma_bad: T must be a proper subset of V(K)");
  const VertexSet outside = k.vertices() - t_vertices;
  if (outside.size() > params.bad_bound(gamma)) return false;
  if (t_vertices.size() < 2) return false;
  VertexSet targets = t_vertices;
  targets.erase(z);
  if (!reaches(k, outside, targets, z)) return false;
  return classify_pair(k, k.vertices(), t_vertices, kAlpha, kClassifyBound).kind == PairClass::Rigid;
}

std::vector<GSetMember> enumerate_g0(const GSetParams& params) {
  params.validate(0);
  Graph root(1);
  auto cands = extend(root, {VertexSet(1, {0})}, 0, params.v0_bound, params);
  // The chain of a layer-0 member is just V(G_0).
  for (auto& c : cands) c.chain.erase(c.chain.begin());
  std::vector<std::vector<Candidate>> one;
  one.push_back(std::move(cands));
  return finish_layer(std::move(one), 0, params);
}

GSetRegistry enumerate_g(const GSetParams& params, int layers) {
  params.validate(layers);
  std::vector<std::vector<GSetMember>> all;
  all.push_back(enumerate_g0(params));
  for (int i = 1; i <= layers; ++i) {
    const auto& prev = all.back();
    std::vector<std::vector<Candidate>> per_base(prev.size());
    parallel_for(prev.size(), [&](size_t j) {
      per_base[j] = extend(prev[j].graph, prev[j].chain, i, params.bad_bound(i), params);
    });
    all.push_back(finish_layer(std::move(per_base), i, params));
  }
  return GSetRegistry(params, std::move(all));
}

GSetRegistry::GSetRegistry(GSetParams params, std::vector<std::vector<GSetMember>> layers)
    : params_(std::move(params)), layers_(std::move(layers)) {
  std::map<Certificate, int> seen;
  for (const auto& layer : layers_)
    for (const auto& m : layer)
      if (seen.try_emplace(m.certificate, static_cast<int>(members_.size())).second) members_.push_back(m);
}

std::optional<int> GSetRegistry::find(const Graph& g, int root) const {
  if (g.order() > kMaxCanonicalBound) return std::nullopt;
  const Certificate cert = rooted_canonical_form(g, root, kMaxCanonicalBound);
  for (size_t i = 0; i < members_.size(); ++i)
    if (members_[i].certificate == cert) return static_cast<int>(i);
  return std::nullopt;
}

namespace {

std::string member_file(int layer, size_t index) {
  std::string idx = std::to_string(index);
  return "L" + std::to_string(layer) + "_" + std::string(idx.size() < 4 ? 4 - idx.size() : 0, '0') + idx + ".g6";
}

std::string chain_str(const std::vector<VertexSet>& chain) {
  std::string out;
  for (size_t j = 0; j < chain.size(); ++j) {
    if (j) out += ';';
    bool first = true;
    for (int v : chain[j]) {
      out += (first ? "" : ",") + std::to_string(v);
      first = false;
    }
  }
  return out;
}

}  // namespace

void GSetRegistry::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  {
    std::ofstream p(dir / "params.txt");
    params_.write(p);
    p << "layers=" << max_layer() << "\n";
  }
  std::ofstream manifest(dir / "manifest.txt");
  manifest << "# one line per member of each layer\n";
  for (size_t i = 0; i < layers_.size(); ++i)
    for (size_t j = 0; j < layers_[i].size(); ++j) {
      const GSetMember& m = layers_[i][j];
      const std::string file = member_file(static_cast<int>(i), j);
      std::ofstream out(dir / file);
      write_rooted(out, {m.graph, 0});
      manifest << "layer=" << i << " index=" << j << " file=" << file << " root=0 n=" << m.graph.order()
               << " e=" << m.graph.size() << " chain=" << chain_str(m.chain) << " f=" << m.f << " rho=" << m.rho
               << "\n";
    }
  if (!manifest) throw Error("cannot write registry to " + dir.string());
}

GSetRegistry GSetRegistry::load(const std::filesystem::path& dir) {
  std::ifstream pin(dir / "params.txt");
  if (!pin) throw Error("cannot open " + (dir / "params.txt").string());
  std::stringstream rest;
  int layers = 0;
  std::string line;
  while (std::getline(pin, line)) {
    if (line.rfind("layers=", 0) == 0)
      layers = parse_int(trim(line.substr(7)), "layers");
    else
      rest << line << "\n";
  }
  GSetParams params = GSetParams::parse(rest);
  std::vector<std::vector<GSetMember>> all(static_cast<size_t>(layers) + 1);
  std::ifstream manifest(dir / "manifest.txt");
  if (!manifest) throw Error("cannot open " + (dir / "manifest.txt").string());
  int line_no = 0;
  while (std::getline(manifest, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::map<std::string, std::string> kv;
    for (const auto& tok : split(line, ' ')) {
      if (tok.empty()) continue;
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParseError("expected key=value", line_no, 1);
      kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    for (const char* key : {"layer", "file", "chain", "f", "rho"})
      if (!kv.count(key)) throw ParseError(std::string("missing key ") + key, line_no, 1);
    GSetMember m;
    m.layer = parse_int(kv["layer"], "layer");
    if (m.layer < 0 || m.layer > layers) throw ParseError("layer out of range", line_no, 1);
    std::ifstream gin(dir / kv["file"]);
    if (!gin) throw Error("cannot open " + (dir / kv["file"]).string());
    RootedGraph rg = read_rooted(gin);
    if (rg.root != 0) throw ParseError("member root must be vertex 0", line_no, 1);
    m.graph = rg.graph;
    m.certificate = rooted_canonical_form(m.graph, 0, kMaxCanonicalBound);
    m.graph6 = to_graph6(m.graph);
    for (const auto& part : split(kv["chain"], ';')) {
      VertexSet s(m.graph.order());
      for (const auto& v : split(part, ',')) s.insert(parse_int(v, "chain"));
      m.chain.push_back(s);
    }
    m.f = Rational::parse(kv["f"]);
    m.rho = Rational::parse(kv["rho"]);
    all[static_cast<size_t>(m.layer)].push_back(std::move(m));
  }
  return GSetRegistry(params, std::move(all));
}

int GPropertyReport::failures() const {
  int count = distinct_certificates ? 0 : 1;
  for (const auto& m : members) count += m.ok() ? 0 : 1;
  return count;
}

GPropertyReport verify_g_properties(const GSetRegistry& reg) {
  const GSetParams& params = reg.params();
  GPropertyReport report;
  std::vector<std::map<Certificate, int>> layer_certs(static_cast<size_t>(reg.max_layer()) + 1);
  for (int i = 0; i <= reg.max_layer(); ++i) {
    for (size_t j = 0; j < reg.layer(i).size(); ++j)
      if (!layer_certs[i].try_emplace(reg.layer(i)[j].certificate, static_cast<int>(j)).second)
        report.distinct_certificates = false;
  }
  std::map<Certificate, int> all;
  for (const auto& m : reg.members())
    if (!all.try_emplace(m.certificate, 0).second) report.distinct_certificates = false;

  std::vector<std::pair<int, int>> jobs;
  for (int i = 0; i <= reg.max_layer(); ++i)
    for (size_t j = 0; j < reg.layer(i).size(); ++j) jobs.emplace_back(i, static_cast<int>(j));
  report.members.resize(jobs.size());
  parallel_for(jobs.size(), [&](size_t t) {
    const auto [i, j] = jobs[t];
    const GSetMember& m = reg.layer(i)[static_cast<size_t>(j)];
    const Graph& g = m.graph;
    MemberReport r;
    r.layer = i;
    r.index = j;
    r.f_bound = f_of(g) <= Rational(1) - Rational(i, 5);
    r.density = rho_max_flow(g) < params.density_cap;
    int size_cap = 1 + params.v0_bound;
    for (int gamma = 1; gamma <= i; ++gamma) size_cap += params.bad_bound(gamma);
    r.size = g.order() <= size_cap;
    const VertexSet root(g.order(), {0});
    r.rigid_over_root =
        i == 0 || classify_pair(g, g.vertices(), root, kAlpha, kClassifyBound).kind == PairClass::Rigid;
    VertexSet rest = g.vertices();
    rest.erase(0);
    r.connected = is_connected(g, rest);

    bool chain_ok = static_cast<int>(m.chain.size()) == i + 1 && m.chain.back() == g.vertices();
    for (int level = 0; chain_ok && level <= i; ++level) {
      const VertexSet& gj = m.chain[static_cast<size_t>(level)];
      chain_ok = gj.contains(0) && gj.size() >= 2;
      if (!chain_ok) break;
      auto sub = induced_subgraph(g, gj);  // vertex 0 stays first
      if (level == 0) {
        VertexSet sub_rest = sub.graph.vertices();
        sub_rest.erase(0);
        const PairClass kind =
            classify_pair(sub.graph, sub.graph.vertices(), VertexSet(sub.graph.order(), {0}), kAlpha, kClassifyBound)
                .kind;
        chain_ok = sub.graph.order() - 1 <= params.v0_bound && is_connected(sub.graph, sub_rest) &&
                   (kind == PairClass::Neutral || kind == PairClass::Rigid);
      } else {
        const VertexSet& prev = m.chain[static_cast<size_t>(level - 1)];
        chain_ok = prev.is_subset_of(gj) && prev != gj;
        if (!chain_ok) break;
        VertexSet prev_local(sub.graph.order());
        for (size_t a = 0; a < sub.original.size(); ++a)
          if (prev.contains(sub.original[a])) prev_local.insert(static_cast<int>(a));
        chain_ok = is_gamma_bad(sub.graph, prev_local, 0, level, params);
      }
      chain_ok = chain_ok && rho_max(sub.graph) < params.density_cap &&
                 layer_certs[level].count(rooted_canonical_form(sub.graph, 0, kMaxCanonicalBound)) > 0;
    }
    r.chain = chain_ok;
    report.members[t] = r;
  });
  return report;
}

GluedExtension check_glued_extension(const GSetRegistry& reg, const Graph& g1, const Graph& g2, const Bridge& bridge) {
  if (bridge.added < 1 || bridge.added > 5)
    throw PreconditionError("glued extension: the bridge must add between 1 and 5 vertices");
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (n1 < 2 || n2 < 2) throw PreconditionError("glued extension: members must have a non-root vertex");
  const int glued = n1 + n2 - 1;
  const int n = glued + bridge.added;
  // Map member vertices into the glued numbering.
  auto map1 = [&](int v) { return v; };
  auto map2 = [&](int v) { return v == 0 ? 0 : n1 + v - 1; };
  Graph k(n);
  for (auto [u, v] : g1.edges()) k.add_edge(map1(u), map1(v));
  for (auto [u, v] : g2.edges()) k.add_edge(map2(u), map2(v));
  for (auto [u, v] : bridge.edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("glued extension: bridge edge out of range");
    if (u < glued && v < glued) throw PreconditionError("glued extension: bridge edges must touch an added vertex");
    k.add_edge(u, v);
  }
  VertexSet t = VertexSet::full(glued);
  t = VertexSet(n, std::span<const int>(t.to_vector()));
  VertexSet added = k.vertices() - t;
  VertexSet side1(n);
  VertexSet side2(n);
  for (int v = 1; v < n1; ++v) side1.insert(map1(v));
  for (int v = 1; v < n2; ++v) side2.insert(map2(v));
  if (!reaches(k, added, side1, 0) || !reaches(k, added, side2, 0))
    throw PreconditionError("glued extension: an added vertex has no path to both members avoiding z");
  if (classify_pair(k, k.vertices(), t, kAlpha, kClassifyBound).kind != PairClass::Rigid)
    throw PreconditionError("glued extension: the bridge is not 3/5-rigid");
  GluedExtension out;
  out.k = k;
  out.rho = rho_max(k);
  out.dense = !(out.rho < reg.params().density_cap);
  out.member = reg.find(k, 0).has_value();
  return out;
}

}  // namespace zol
