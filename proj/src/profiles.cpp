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

#include "zol/profiles.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <unordered_set>

#include "zol/errors.hpp"
#include "zol/ext_calculus.hpp"

namespace zol {
namespace {

const Rational kAlpha(3, 5);

void check_size(const Graph& g, const char* what) {
  if (g.order() > kProfileVertexBound)
    throw BoundError(std::string(what) + ": " + std::to_string(g.order()) + " vertices exceeds bound " +
                     std::to_string(kProfileVertexBound));
}

uint64_t full_mask(int n) { return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

uint64_t to_mask(const VertexSet& s) { return s.mask(); }

VertexSet from_mask(int n, uint64_t m) { return VertexSet::from_mask(n, m & full_mask(n)); }

LabeledPair make_template(int roots, int added, std::initializer_list<Edge> edges) {
  LabeledPair p;
  p.g = Graph::from_edges(roots + added, edges);
  p.order.resize(static_cast<size_t>(roots + added));
  for (int i = 0; i < roots + added; ++i) p.order[i] = i;
  p.roots = roots;
  return p;
}

PairClass classify_template(const LabeledPair& p) {
  VertexSet h(p.g.order());
  for (int i = 0; i < p.roots; ++i) h.insert(p.order[i]);
  return classify_pair(p.g, p.g.vertices(), h, kAlpha).kind;
}

NeutralTemplates build_templates() {
  NeutralTemplates t;
  // K1: r1=0, r2=1, r3=2, t1=3, w=4, t3=5.
  t.k1 = make_template(3, 3, {{3, 0}, {4, 1}, {5, 2}, {3, 4}, {4, 5}});
  // K2: a=0, b=1, c=2, d=3, e=4.
  t.k2 = make_template(2, 3, {{0, 2}, {2, 3}, {3, 1}, {4, 3}, {4, 2}});
  t.kstar = make_template(2, 1, {{2, 0}, {2, 1}});
  if (classify_template(t.k1) != PairClass::Neutral) throw Error("template (K1,T1) is not 3/5-neutral");
  if (classify_template(t.k2) != PairClass::Neutral) throw Error("template (K2,T2) is not 3/5-neutral");
  if (classify_template(t.kstar) != PairClass::Rigid) throw Error("template (K*,T*) is not 3/5-rigid");
  return t;
}

using SpecCache = std::map<std::vector<int>, std::set<std::string>>;

// T vector for one canonical order of U, memoising per root tuple.
TVector t_vector_cached(const Graph& g, std::span<const int> order, SpecCache (&cache)[2]) {
  const VertexSet u(g.order(), order);
  const int m = static_cast<int>(order.size());
  TVector out;
  for (int j = 1; j <= 2; ++j) {
    const LabeledPair& tmpl = templates().k(j);
    const int nu = tmpl.roots;
    std::vector<int> a(static_cast<size_t>(nu), 1);
    while (true) {
      std::vector<int> roots(static_cast<size_t>(nu));
      for (int i = 0; i < nu; ++i) roots[i] = order[a[i] - 1];
      auto it = cache[j - 1].find(roots);
      if (it == cache[j - 1].end()) {
        std::set<std::string> specs;
        VertexSet allowed = g.vertices() - u;
        for (int r : roots) allowed.insert(r);
        for_each_extension(g, tmpl, roots, allowed, true, [&](const std::vector<int>& added) {
          std::vector<int> canon = roots;
          canon.insert(canon.end(), added.begin(), added.end());
          specs.insert(specification(g, u, canon, j));
          return true;
        });
        it = cache[j - 1].emplace(roots, std::move(specs)).first;
      }
      if (!it->second.empty()) out.t[j - 1].emplace(a, it->second);
      int i = nu - 1;
      while (i >= 0 && a[i] == m) a[i--] = 1;
      if (i < 0) break;
      ++a[i];
    }
  }
  return out;
}

// Enumerates embeddings (injective, edge-preserving) of a rooted pattern with
// root 0 into g sending the root to u.
class Embedder {
 public:
  Embedder(const Graph& g, int u) : g_(g), u_(u), n_(g.order()) {
    for (int v = 0; v < n_; ++v) deg_.push_back(g.degree(v));
  }

  // visit(phi, induced) with phi[k] the image of pattern vertex k.
  template <typename Visit>
  void run(const Graph& pattern, Visit&& visit) {
    const int o = pattern.order();
    if (o > n_ || pattern.size() > g_.size()) return;
    if (g_.degree(u_) < pattern.degree(0)) return;
    // Breadth-first order from the root so every later vertex has an earlier neighbour.
    std::vector<int> seq{0};
    std::vector<bool> seen(static_cast<size_t>(o), false);
    seen[0] = true;
    for (size_t h = 0; h < seq.size(); ++h)
      for (int w = 0; w < o; ++w)
        if (!seen[w] && pattern.adjacent(seq[h], w)) {
          seen[w] = true;
          seq.push_back(w);
        }
    if (static_cast<int>(seq.size()) != o) return;  // disconnected patterns are not members
    std::vector<std::vector<int>> earlier(static_cast<size_t>(o));
    std::vector<uint64_t> deg_ok(static_cast<size_t>(o), 0);
    for (int k = 0; k < o; ++k) {
      for (int q = 0; q < k; ++q)
        if (pattern.adjacent(seq[k], seq[q])) earlier[k].push_back(q);
      const int need = pattern.degree(seq[k]);
      for (int v = 0; v < n_; ++v)
        if (deg_[v] >= need) deg_ok[k] |= uint64_t{1} << v;
    }
    std::vector<int> img(static_cast<size_t>(o));
    img[0] = u_;
    std::vector<int> phi(static_cast<size_t>(o));
    const int64_t pattern_edges = pattern.size();
    auto rec = [&](auto&& self, int k, uint64_t used) -> void {
      if (k == o) {
        for (int i = 0; i < o; ++i) phi[seq[i]] = img[i];
        const VertexSet image = from_mask(n_, used);
        visit(phi, used, g_.edges_within(image) == pattern_edges);
        return;
      }
      uint64_t cand = deg_ok[k] & ~used;
      for (int q : earlier[k]) cand &= g_.mask(img[q]);
      while (cand) {
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        img[k] = v;
        self(self, k + 1, used | (uint64_t{1} << v));
      }
    };
    rec(rec, 1, uint64_t{1} << u_);
  }

 private:
  const Graph& g_;
  int u_;
  int n_;
  std::vector<int> deg_;
};

std::string join(const std::vector<int>& v, int offset = 0) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i] + offset);
  return out;
}

// Same search as for_each_extension with VertexSet rows, for graphs above 64 vertices.
void extension_search_wide(const Graph& g, const LabeledPair& tmpl, std::span<const int> roots,
                           const VertexSet& allowed, bool strict,
                           const std::function<bool(const std::vector<int>&)>& visit) {
  const int k = tmpl.roots;
  const int added = tmpl.size() - k;
  VertexSet base = allowed & g.vertices();
  for (int r : roots) base.erase(r);
  std::vector<VertexSet> cand;
  for (int p = 0; p < added; ++p) {
    const int tv = tmpl.order[k + p];
    VertexSet c = base;
    for (int i = 0; i < k; ++i) {
      if (tmpl.g.adjacent(tv, tmpl.order[i]))
        c &= g.neighbours(roots[i]);
      else if (strict)
        c -= g.neighbours(roots[i]);
    }
    if (c.empty()) return;
    cand.push_back(std::move(c));
  }
  std::vector<int> chosen(static_cast<size_t>(added));
  bool stop = false;
  auto rec = [&](auto&& self, int p) -> void {
    if (p == added) {
      stop = !visit(chosen);
      return;
    }
    VertexSet c = cand[p];
    for (int q = 0; q < p; ++q) {
      c.erase(chosen[q]);
      if (tmpl.g.adjacent(tmpl.order[k + p], tmpl.order[k + q]))
        c &= g.neighbours(chosen[q]);
      else if (strict)
        c -= g.neighbours(chosen[q]);
    }
    for (int w : c) {
      if (stop) return;
      chosen[p] = w;
      self(self, p + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

const LabeledPair& NeutralTemplates::k(int j) const {
  if (j == 1) return k1;
  if (j == 2) return k2;
  throw PreconditionError("template index must be 1 or 2");
}

const NeutralTemplates& templates() {
  static const NeutralTemplates t = build_templates();
  return t;
}

VertexSet neighbourhood_set(const Graph& g, std::span<const std::pair<int, bool>> constraints) {
  VertexSet out = g.vertices();
  VertexSet listed(g.order());
  for (auto [v, adjacent] : constraints) {
    if (v < 0 || v >= g.order()) throw PreconditionError("neighbourhood_set: vertex out of range");
    if (listed.contains(v)) throw PreconditionError("neighbourhood_set: repeated constraint vertex");
    listed.insert(v);
    const VertexSet nb = g.neighbours(v);
    out = adjacent ? (out & nb) : (out - nb);
  }
  return out - listed;
}

void for_each_extension(const Graph& g, const LabeledPair& tmpl, std::span<const int> roots, const VertexSet& allowed,
                        bool strict, const std::function<bool(const std::vector<int>&)>& visit) {
  const int k = tmpl.roots;
  if (static_cast<int>(roots.size()) != k) throw PreconditionError("extension search: root count mismatch");
  for (int r : roots)
    if (r < 0 || r >= g.order()) throw PreconditionError("extension search: root out of range");
  if (g.order() > 64) return extension_search_wide(g, tmpl, roots, allowed, strict, visit);
  uint64_t root_mask = 0;
  for (int r : roots) root_mask |= uint64_t{1} << r;
  const int added = tmpl.size() - k;
  std::vector<uint64_t> cand(static_cast<size_t>(added));
  for (int p = 0; p < added; ++p) {
    const int tv = tmpl.order[k + p];
    uint64_t c = to_mask(allowed) & full_mask(g.order()) & ~root_mask;
    for (int i = 0; i < k; ++i) {
      if (tmpl.g.adjacent(tv, tmpl.order[i]))
        c &= g.mask(roots[i]);
      else if (strict)
        c &= ~g.mask(roots[i]);
    }
    if (!c) return;
    cand[p] = c;
  }
  std::vector<int> chosen(static_cast<size_t>(added));
  bool stop = false;
  auto rec = [&](auto&& self, int p, uint64_t used) -> void {
    if (stop) return;
    if (p == added) {
      stop = !visit(chosen);
      return;
    }
    uint64_t c = cand[p] & ~used;
    for (int q = 0; q < p; ++q) {
      const bool want = tmpl.g.adjacent(tmpl.order[k + p], tmpl.order[k + q]);
      if (want)
        c &= g.mask(chosen[q]);
      else if (strict)
        c &= ~g.mask(chosen[q]);
    }
    while (c && !stop) {
      const int w = std::countr_zero(c);
      c &= c - 1;
      chosen[p] = w;
      self(self, p + 1, used | (uint64_t{1} << w));
    }
  };
  rec(rec, 0, 0);
}

bool zeta(const Graph& g, const VertexSet& u, std::span<const int> roots, int j) {
  const LabeledPair& tmpl = templates().k(j);
  if (static_cast<int>(roots.size()) != tmpl.roots)
    throw PreconditionError("zeta: expected " + std::to_string(tmpl.roots) + " roots");
  VertexSet allowed = g.vertices() - u;
  for (int r : roots) allowed.insert(r);
  bool found = false;
  for_each_extension(g, tmpl, roots, allowed, true, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

const std::vector<std::array<int, 3>>& spec_domain(int j) {
  static const std::array<std::vector<std::array<int, 3>>, 2> domains = [] {
    std::array<std::vector<std::array<int, 3>>, 2> d;
    for (int jj = 1; jj <= 2; ++jj) {
      const int nu = jj == 1 ? 3 : 2;
      const int top = nu + 3;
      for (int a = 1; a <= top; ++a)
        for (int b = 1; b <= top; ++b)
          for (int c = 1; c <= top; ++c)
            if (a > nu || b > nu || c > nu) d[jj - 1].push_back({a, b, c});
    }
    return d;
  }();
  if (j != 1 && j != 2) throw PreconditionError("template index must be 1 or 2");
  return domains[j - 1];
}

std::string specification(const Graph& g, const VertexSet& u, std::span<const int> canonical_order, int j) {
  const LabeledPair& tmpl = templates().k(j);
  if (static_cast<int>(canonical_order.size()) != tmpl.size())
    throw PreconditionError("specification: canonical order has the wrong length");
  if (!is_extension(tmpl, g, canonical_order, true, true))
    throw PreconditionError("specification: order is not a canonical order of a template extension");
  VertexSet ku = u;
  for (int v : canonical_order) ku.insert(v);
  const auto& domain = spec_domain(j);
  std::string bits(domain.size(), '0');
  for (size_t i = 0; i < domain.size(); ++i) {
    const int vs[3] = {canonical_order[domain[i][0] - 1], canonical_order[domain[i][1] - 1],
                       canonical_order[domain[i][2] - 1]};
    if (zeta(g, ku, vs, 1)) bits[i] = '1';
  }
  return bits;
}

TVector t_vector(const Graph& g, std::span<const int> order) {
  check_size(g, "t_vector");
  SpecCache cache[2];
  return t_vector_cached(g, order, cache);
}

ProfileTable find_u_bad(const Graph& g, int u, const GSetRegistry& reg) {
  check_size(g, "find_u_bad");
  if (u < 0 || u >= g.order()) throw PreconditionError("find_u_bad: vertex out of range");
  const int n = g.order();
  Embedder embed(g, u);
  std::unordered_set<uint64_t> images;
  std::map<std::pair<int, uint64_t>, std::set<std::vector<int>>> strict_copies;
  const auto& members = reg.members();
  for (size_t i = 0; i < members.size(); ++i) {
    embed.run(members[i].graph, [&](const std::vector<int>& phi, uint64_t image, bool induced) {
      images.insert(image);
      if (induced) strict_copies[{static_cast<int>(i), image}].insert(phi);
    });
  }
  ProfileTable out;
  out.u = u;
  uint64_t covered = 0;
  for (auto& [key, orders] : strict_copies) {
    const uint64_t s = key.second;
    const bool maximal =
        std::none_of(images.begin(), images.end(), [&](uint64_t t) { return t != s && (t & s) == s; });
    if (!maximal) continue;
    UBadSubgraph ub;
    ub.member = key.first;
    ub.layer = members[static_cast<size_t>(key.first)].layer;
    ub.vertices = from_mask(n, s);
    ub.canonical_orders.assign(orders.begin(), orders.end());
    out.u_bad.push_back(std::move(ub));
    covered |= s;
  }
  out.u0 = from_mask(n, full_mask(n) & ~covered);
  return out;
}

ProfileTable profile(const Graph& g, int u, const GSetRegistry& reg) {
  ProfileTable table = find_u_bad(g, u, reg);
  for (UBadSubgraph& ub : table.u_bad) {
    SpecCache cache[2];
    bool first = true;
    for (const auto& order : ub.canonical_orders) {
      TVector t = t_vector_cached(g, order, cache);
      if (first || t < ub.t) {
        ub.t = std::move(t);
        ub.best_order = order;
        first = false;
      }
    }
    table.profiles[ub.member].insert(ub.t);
  }
  return table;
}

bool u_bad_pairwise_disjoint(const ProfileTable& table) {
  for (size_t a = 0; a < table.u_bad.size(); ++a)
    for (size_t b = a + 1; b < table.u_bad.size(); ++b) {
      VertexSet common = table.u_bad[a].vertices & table.u_bad[b].vertices;
      common.erase(table.u);
      if (!common.empty()) return false;
    }
  return true;
}

void ProfileTable::write(std::ostream& os) const {
  os << "vertex=" << u << "\n";
  for (const auto& ub : u_bad) {
    os << "u_bad layer=" << ub.layer << " member=" << ub.member << " vertices=" << join(ub.vertices.to_vector())
       << " orders=" << ub.canonical_orders.size() << "\n";
  }
  os << "u0=" << join(u0.to_vector()) << "\n";
  for (const auto& [member, set] : profiles) {
    int layer = 0;
    for (const auto& ub : u_bad)
      if (ub.member == member) layer = ub.layer;
    int entry = 0;
    for (const TVector& t : set) {
      os << "profile layer=" << layer << " member=" << member << " entry=" << entry << "\n";
      for (int j = 0; j < 2; ++j)
        for (const auto& [roots, specs] : t.t[j])
          for (const auto& spec : specs) os << "  T" << (j + 1) << " roots=" << join(roots) << " spec=" << spec << "\n";
      ++entry;
    }
  }
}

VertexSet kt_star_neighbourhood(const Graph& g, const VertexSet& seed, int order) {
  if (seed.empty()) throw PreconditionError("kt_star_neighbourhood: empty seed");
  VertexSet w = seed;
  for (int step = 0; order < 0 || step < order; ++step) {
    VertexSet next = w;
    for (int v = 0; v < g.order(); ++v)
      if (!w.contains(v) && (g.neighbours(v) & w).size() >= 2) next.insert(v);
    if (next == w) break;
    w = std::move(next);
  }
  return w;
}

KTMaximality kt_maximal(const Graph& g, const VertexSet& g_tilde, const VertexSet& h_tilde, const LabeledPair& tmpl) {
  if (!h_tilde.is_subset_of(g_tilde) || !g_tilde.is_subset_of(g.vertices()))
    throw PreconditionError("kt_maximal: expected H~ within G~ within the graph");
  const int t = tmpl.roots;
  if (t < 1 || t > g_tilde.size()) throw PreconditionError("kt_maximal: template root count must be in 1..v(G~)");
  if (tmpl.size() == t) throw PreconditionError("kt_maximal: template adds no vertices");
  const std::vector<int> pool = g_tilde.to_vector();
  KTMaximality out;
  std::vector<int> tuple(static_cast<size_t>(t));
  std::vector<bool> taken(pool.size(), false);
  auto rec = [&](auto&& self, int pos) -> void {
    if (!out.maximal) return;
    if (pos == t) {
      if (std::all_of(tuple.begin(), tuple.end(), [&](int v) { return h_tilde.contains(v); })) return;
      VertexSet rest = g_tilde;
      for (int v : tuple) rest.erase(v);
      VertexSet allowed = g.vertices() - g_tilde;
      for (int v : rest) allowed -= g.neighbours(v);
      for_each_extension(g, tmpl, tuple, allowed, false, [&](const std::vector<int>& added) {
        out.maximal = false;
        out.witness = KTViolation{tuple, added};
        return false;
      });
      return;
    }
    for (size_t i = 0; i < pool.size(); ++i) {
      if (taken[i]) continue;
      taken[i] = true;
      tuple[pos] = pool[i];
      self(self, pos + 1);
      taken[i] = false;
    }
  };
  rec(rec, 0);
  return out;
}

WitnessResult build_witness(const Graph& a, int x1, const GSetRegistry& reg) {
  check_size(a, "build_witness");
  if (!(rho_max_flow(a) < Rational(5, 3))) throw HypothesisError("build_witness: rho_max(A) >= 5/3");
  WitnessResult out;
  out.source = profile(a, x1, reg);

  int count = 1;  // z1 = 0
  std::vector<Edge> edges;
  auto fresh = [&](int k) {
    std::vector<int> v(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) v[i] = count++;
    if (count > kProfileVertexBound) throw BoundError("build_witness: Z exceeds the profile vertex bound");
    return v;
  };
  // Adds a strict copy of the template over the roots; returns the canonical order.
  auto attach = [&](const LabeledPair& tmpl, const std::vector<int>& roots) {
    std::vector<int> canon = roots;
    std::vector<int> added = fresh(tmpl.size() - tmpl.roots);
    canon.insert(canon.end(), added.begin(), added.end());
    std::vector<int> where(static_cast<size_t>(tmpl.g.order()));
    for (int i = 0; i < tmpl.size(); ++i) where[tmpl.order[i]] = canon[i];
    for (auto [p, q] : tmpl.g.edges()) {
      const bool p_root = std::find(tmpl.order.begin(), tmpl.order.begin() + tmpl.roots, p) !=
                          tmpl.order.begin() + tmpl.roots;
      const bool q_root = std::find(tmpl.order.begin(), tmpl.order.begin() + tmpl.roots, q) !=
                          tmpl.order.begin() + tmpl.roots;
      if (p_root && q_root) continue;
      edges.emplace_back(where[p], where[q]);
    }
    return canon;
  };
  auto realised = [&](int j, const std::vector<int>& copy, const std::vector<int>& roots, const std::string& spec) {
    const Graph cur = Graph::from_edges(count, edges);
    const VertexSet u(count, std::span<const int>(copy));
    VertexSet allowed = cur.vertices() - u;
    for (int r : roots) allowed.insert(r);
    bool found = false;
    for_each_extension(cur, templates().k(j), roots, allowed, true, [&](const std::vector<int>& added) {
      std::vector<int> canon = roots;
      canon.insert(canon.end(), added.begin(), added.end());
      found = specification(cur, u, canon, j) == spec;
      return !found;
    });
    return found;
  };

  for (const auto& [member, set] : out.source.profiles) {
    const Graph& gi = reg.members()[static_cast<size_t>(member)].graph;
    for (const TVector& t : set) {
      std::vector<int> zpos = fresh(gi.order() - 1);
      zpos.insert(zpos.begin(), 0);
      for (auto [p, q] : gi.edges()) edges.emplace_back(zpos[p], zpos[q]);
      out.copies.push_back(VertexSet(kProfileVertexBound, std::span<const int>(zpos)));
      for (int j = 1; j <= 2; ++j)
        for (const auto& [idx, specs] : t.t[j - 1]) {
          std::vector<int> roots;
          for (int i : idx) roots.push_back(zpos[i - 1]);
          for (const std::string& spec : specs) {
            // A gadget added for another root tuple (templates have root symmetries)
            // may already realise this specification.
            if (realised(j, zpos, roots, spec)) continue;
            std::vector<int> w = attach(templates().k(j), roots);
            const auto& domain = spec_domain(j);
            for (size_t s = 0; s < domain.size(); ++s) {
              if (spec[s] != '1') continue;
              attach(templates().k1, {w[domain[s][0] - 1], w[domain[s][1] - 1], w[domain[s][2] - 1]});
            }
          }
        }
    }
  }
  out.z = Graph::from_edges(count, edges);
  for (auto& c : out.copies) c = VertexSet(count, std::span<const int>(c.to_vector()));
  out.rho = rho_max_flow(out.z);
  out.sparse = out.rho < Rational(5, 3);
  out.built = profile(out.z, out.z1, reg);
  std::vector<VertexSet> found;
  for (const auto& ub : out.built.u_bad) found.push_back(ub.vertices);
  std::vector<VertexSet> expected = out.copies;
  std::sort(found.begin(), found.end());
  std::sort(expected.begin(), expected.end());
  out.same_bad_set = found == expected;
  out.same_profiles = out.built.profiles == out.source.profiles;
  return out;
}

}  // namespace zol
