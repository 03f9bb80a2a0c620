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

#include "zol/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>

#include "zol/errors.hpp"

namespace zol {
namespace {

using Cells = std::vector<std::vector<int>>;

class Canonizer {
 public:
  Canonizer(const Graph& g, std::span<const int> colours) : n_(g.order()), adj_(n_) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.mask(v);
    int max_colour = 0;
    for (int c : colours) max_colour = std::max(max_colour, c);
    Cells cells(static_cast<size_t>(max_colour) + 1);
    for (int v = 0; v < n_; ++v) cells[colours[v]].push_back(v);
    for (auto& c : cells) colour_sizes_.push_back(static_cast<int>(c.size()));
    std::erase_if(cells, [](const auto& c) { return c.empty(); });
    initial_ = std::move(cells);
  }

  CanonicalLabeling run() {
    std::vector<int> prefix;
    search(initial_, prefix);
    CanonicalLabeling out;
    out.certificate = Certificate{n_, colour_sizes_, best_bits_};
    out.labeling = best_labeling_;
    out.generators = std::move(generators_);
    return out;
  }

 private:
  // Splits cells by neighbour counts into splitter cells until equitable.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t s = 0; s < cells.size() && !changed; ++s) {
        uint64_t splitter = 0;
        for (int v : cells[s]) splitter |= uint64_t{1} << v;
        for (size_t c = 0; c < cells.size(); ++c) {
          if (cells[c].size() == 1) continue;
          auto count = [&](int v) { return std::popcount(adj_[v] & splitter); };
          const int first = count(cells[c][0]);
          bool uniform = std::all_of(cells[c].begin(), cells[c].end(), [&](int v) { return count(v) == first; });
          if (uniform) continue;
          std::vector<std::pair<int, int>> keyed;
          for (int v : cells[c]) keyed.emplace_back(count(v), v);
          std::sort(keyed.begin(), keyed.end());
          Cells parts;
          for (size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) parts.emplace_back();
            parts.back().push_back(keyed[i].second);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<uint64_t> leaf_bits(const std::vector<int>& lab) const {
    std::vector<uint64_t> bits((static_cast<size_t>(n_) * (n_ - 1) / 2 + 63) / 64, 0);
    size_t k = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j, ++k)
        if ((adj_[lab[i]] >> lab[j]) & 1) bits[k >> 6] |= uint64_t{1} << (k & 63);
    return bits;
  }

  void search(Cells cells, std::vector<int>& prefix) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<int> lab;
      for (const auto& c : cells) lab.push_back(c[0]);
      auto bits = leaf_bits(lab);
      if (!have_best_ || bits < best_bits_) {
        best_bits_ = std::move(bits);
        best_labeling_ = std::move(lab);
        have_best_ = true;
      } else if (bits == best_bits_) {
        std::vector<int> perm(n_);
        bool identity = true;
        for (int i = 0; i < n_; ++i) {
          perm[best_labeling_[i]] = lab[i];
          identity = identity && best_labeling_[i] == lab[i];
        }
        if (!identity) generators_.push_back(std::move(perm));
      }
      return;
    }
    const size_t ti = static_cast<size_t>(target - cells.begin());
    std::vector<int> candidates = cells[ti];
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> explored;
    for (int v : candidates) {
      auto orbit = orbits_fixing(n_, generators_, prefix);
      bool redundant = std::any_of(explored.begin(), explored.end(), [&](int w) { return orbit[w] == orbit[v]; });
      if (redundant) continue;
      explored.push_back(v);
      Cells child = cells;
      std::vector<int> rest;
      for (int w : child[ti])
        if (w != v) rest.push_back(w);
      child[ti] = {v};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(ti) + 1, rest);
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  int n_;
  std::vector<uint64_t> adj_;
  std::vector<int> colour_sizes_;
  Cells initial_;
  bool have_best_ = false;
  std::vector<uint64_t> best_bits_;
  std::vector<int> best_labeling_;
  std::vector<std::vector<int>> generators_;
};

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

}  // namespace

std::string Certificate::hex() const {
  std::string out = std::to_string(n);
  for (int c : colour_sizes) out += ":" + std::to_string(c);
  out += "/";
  char buf[17];
  for (uint64_t w : bits) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(w));
    out += buf;
  }
  return out;
}

Graph CanonicalLabeling::apply(const Graph& g) const {
  std::vector<int> perm(labeling.size());
  for (size_t i = 0; i < labeling.size(); ++i) perm[labeling[i]] = static_cast<int>(i);
  return g.relabel(perm);
}

std::vector<int> orbits_fixing(int n, std::span<const std::vector<int>> generators, std::span<const int> fixed) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& gen : generators) {
    bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](int v) { return gen[v] == v; });
    if (!fixes) continue;
    for (int v = 0; v < n; ++v) {
      int a = find_root(parent, v);
      int b = find_root(parent, gen[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (int v = 0; v < n; ++v) parent[v] = find_root(parent, v);
  return parent;
}

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colours, int bound) {
  bound = std::min(bound, kMaxCanonicalBound);
  if (g.order() > bound)
    throw BoundError("canonical form: graph has " + std::to_string(g.order()) + " vertices, bound is " +
                     std::to_string(bound));
  if (static_cast<int>(colours.size()) != g.order()) throw PreconditionError("canonical form: colour count mismatch");
  for (int c : colours)
    if (c < 0 || c > g.order()) throw PreconditionError("canonical form: colour out of range");
  if (g.order() == 0) return CanonicalLabeling{Certificate{0, {0}, {}}, {}, {}};
  return Canonizer(g, colours).run();
}

Certificate canonical_form(const Graph& g, int bound) {
  std::vector<int> colours(g.order(), 0);
  return canonical_labeling(g, colours, bound).certificate;
}

Certificate rooted_canonical_form(const Graph& g, int root, int bound) {
  if (root < 0 || root >= g.order()) throw PreconditionError("rooted canonical form: root out of range");
  std::vector<int> colours(g.order(), 1);
  colours[root] = 0;
  return canonical_labeling(g, colours, bound).certificate;
}

}  // namespace zol
