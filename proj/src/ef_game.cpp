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

#include "zol/ef_game.hpp"

#include <numeric>
#include <set>
#include <unordered_map>

#include "zol/canonical.hpp"
#include "zol/errors.hpp"

namespace zol {

std::string to_string(Player p) { return p == Player::Spoiler ? "spoiler" : "duplicator"; }

bool partial_iso_holds(const GameState& state, const Graph& x, const Graph& y) {
  if (state.x.size() != state.y.size()) return false;
  const size_t m = state.x.size();
  for (size_t s = 0; s < m; ++s) {
    if (state.x[s] < 0 || state.x[s] >= x.order() || state.y[s] < 0 || state.y[s] >= y.order()) return false;
    for (size_t t = s + 1; t < m; ++t) {
      const bool ex = state.x[s] == state.x[t];
      const bool ey = state.y[s] == state.y[t];
      if (ex != ey) return false;
      if (!ex && x.adjacent(state.x[s], state.x[t]) != y.adjacent(state.y[s], state.y[t])) return false;
    }
  }
  return true;
}

namespace {

std::string var_name(size_t i) { return "x" + std::to_string(i + 1); }

class Solver {
 public:
  Solver(const Graph& x, const Graph& y, const SolveOptions& options) : g_{&x, &y}, options_(options) {
    if (options.orbit_reduction) {
      for (int side = 0; side < 2; ++side) {
        std::vector<int> colours(static_cast<size_t>(g_[side]->order()), 0);
        generators_[side] = canonical_labeling(*g_[side], colours, kMaxCanonicalBound).generators;
      }
    }
  }

  // True when Duplicator wins from a position whose partial isomorphism holds.
  bool duplicator_wins(std::vector<int>& tx, std::vector<int>& ty, int rounds) {
    if (rounds == 0) return true;
    std::string key = encode(tx, ty, rounds);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = true;
    for (int side = 0; side < 2 && result; ++side)
      for (int v : spoiler_moves(side, tx, ty))
        if (!has_reply(side, v, tx, ty, rounds)) {
          result = false;
          break;
        }
    memo_.emplace(std::move(key), result);
    return result;
  }

  // Formula over x1..xm true at tx in X and false at ty in Y; requires a Spoiler win.
  Formula distinguish(std::vector<int>& tx, std::vector<int>& ty, int rounds) {
    if (auto atom = violated_atom(tx, ty)) return *atom;
    for (int side = 0; side < 2; ++side)
      for (int v : spoiler_moves(side, tx, ty)) {
        if (has_reply(side, v, tx, ty, rounds)) continue;
        const std::string name = var_name(tx.size());
        std::vector<Formula> parts;
        std::set<std::string> seen;
        // Replies that repeat an earlier choice are refuted by equality.
        for (size_t s = 0; s < tx.size(); ++s) {
          Formula same = Formula::equal(name, var_name(s));
          parts.push_back(side == 0 ? Formula::negate(same) : same);
          seen.insert(to_string(parts.back()));
        }
        for (int w : replies(side, tx, ty)) {
          push(side, v, w, tx, ty);
          Formula sub = distinguish(tx, ty, rounds - 1);
          pop(tx, ty);
          if (seen.insert(to_string(sub)).second) parts.push_back(sub);
        }
        if (side == 0) {
          Formula body = parts.empty() ? Formula::equal(name, name) : Formula::conj_all(parts);
          return Formula::exists(name, body);
        }
        Formula body = parts.empty() ? Formula::negate(Formula::equal(name, name)) : Formula::disj_all(parts);
        return Formula::forall(name, body);
      }
    throw Error("distinguish: position is not a Spoiler win");
  }

  void trace(std::vector<int>& tx, std::vector<int>& ty, int rounds, bool duplicator_side, int indent,
             std::vector<std::string>& out) {
    if (rounds == 0) return;
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    for (int side = 0; side < 2; ++side)
      for (int v : spoiler_moves(side, tx, ty)) {
        const bool refuted = !has_reply(side, v, tx, ty, rounds);
        if (!duplicator_side && !refuted) continue;
        if (!emit(out, pad + "spoiler " + (side == 0 ? "X:" : "Y:") + std::to_string(v))) return;
        for (int w : replies(side, tx, ty)) {
          push(side, v, w, tx, ty);
          const bool ok = partial_iso_holds({tx, ty, 0}, *g_[0], *g_[1]);
          const bool wins = ok && duplicator_wins(tx, ty, rounds - 1);
          if (duplicator_side && wins) {
            emit(out, pad + "  duplicator " + (side == 0 ? "Y:" : "X:") + std::to_string(w));
            trace(tx, ty, rounds - 1, true, indent + 2, out);
            pop(tx, ty);
            break;
          }
          if (!duplicator_side) {
            emit(out, pad + "  duplicator " + (side == 0 ? "Y:" : "X:") + std::to_string(w) +
                          (ok ? "" : "  (partial isomorphism broken)"));
            if (ok) trace(tx, ty, rounds - 1, false, indent + 2, out);
          }
          pop(tx, ty);
        }
        if (!duplicator_side) return;
      }
  }

 private:
  bool emit(std::vector<std::string>& out, std::string line) {
    if (static_cast<int>(out.size()) > options_.trace_limit) return false;
    out.push_back(static_cast<int>(out.size()) == options_.trace_limit ? "..." : std::move(line));
    return true;
  }

  static std::string encode(const std::vector<int>& tx, const std::vector<int>& ty, int rounds) {
    std::string key;
    key.reserve(4 * (tx.size() + ty.size()) + 1);
    for (int v : tx) key.append(reinterpret_cast<const char*>(&v), sizeof v);
    for (int v : ty) key.append(reinterpret_cast<const char*>(&v), sizeof v);
    key.push_back(static_cast<char>(rounds));
    return key;
  }

  // Vertices worth choosing on `side`: unchosen ones, one per orbit when reducing.
  std::vector<int> candidates(int side, const std::vector<int>& tuple) {
    const int n = g_[side]->order();
    std::vector<int> orbit_rep;
    if (options_.orbit_reduction) orbit_rep = orbits_fixing(n, generators_[side], tuple);
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
      if (std::find(tuple.begin(), tuple.end(), v) != tuple.end()) continue;
      if (options_.orbit_reduction && orbit_rep[v] != v) continue;
      out.push_back(v);
    }
    return out;
  }

  // Re-choosing a vertex is answered by copying, so it never helps Spoiler.
  std::vector<int> spoiler_moves(int side, const std::vector<int>& tx, const std::vector<int>& ty) {
    return candidates(side, side == 0 ? tx : ty);
  }
  std::vector<int> replies(int side, const std::vector<int>& tx, const std::vector<int>& ty) {
    return candidates(1 - side, side == 0 ? ty : tx);
  }

  void push(int side, int v, int w, std::vector<int>& tx, std::vector<int>& ty) {
    tx.push_back(side == 0 ? v : w);
    ty.push_back(side == 0 ? w : v);
  }
  static void pop(std::vector<int>& tx, std::vector<int>& ty) {
    tx.pop_back();
    ty.pop_back();
  }

  bool extends(const std::vector<int>& tx, const std::vector<int>& ty) const {
    const size_t last = tx.size() - 1;
    for (size_t s = 0; s < last; ++s) {
      if ((tx[s] == tx[last]) != (ty[s] == ty[last])) return false;
      if (tx[s] != tx[last] && g_[0]->adjacent(tx[s], tx[last]) != g_[1]->adjacent(ty[s], ty[last])) return false;
    }
    return true;
  }

  bool has_reply(int side, int v, std::vector<int>& tx, std::vector<int>& ty, int rounds) {
    for (int w : replies(side, tx, ty)) {
      push(side, v, w, tx, ty);
      const bool ok = extends(tx, ty) && duplicator_wins(tx, ty, rounds - 1);
      pop(tx, ty);
      if (ok) return true;
    }
    return false;
  }

  std::optional<Formula> violated_atom(const std::vector<int>& tx, const std::vector<int>& ty) const {
    for (size_t s = 0; s < tx.size(); ++s)
      for (size_t t = s + 1; t < tx.size(); ++t) {
        const std::string a = var_name(s);
        const std::string b = var_name(t);
        const bool ex = tx[s] == tx[t];
        if (ex != (ty[s] == ty[t])) return ex ? Formula::equal(a, b) : Formula::negate(Formula::equal(a, b));
        if (ex) continue;
        const bool ax = g_[0]->adjacent(tx[s], tx[t]);
        if (ax != g_[1]->adjacent(ty[s], ty[t]))
          return ax ? Formula::adjacent(a, b) : Formula::negate(Formula::adjacent(a, b));
      }
    return std::nullopt;
  }

  const Graph* g_[2];
  SolveOptions options_;
  std::vector<std::vector<int>> generators_[2];
  std::unordered_map<std::string, bool> memo_;
};

void check_rounds(int k, const SolveOptions& options) {
  if (k < 0) throw PreconditionError("number of rounds must be non-negative");
  if (k > options.max_rounds)
    throw BoundError("rounds " + std::to_string(k) + " exceed bound " + std::to_string(options.max_rounds));
}

}  // namespace

GameOutcome solve(const Graph& x, const Graph& y, int k, const SolveOptions& options) {
  check_rounds(k, options);
  Solver solver(x, y, options);
  std::vector<int> tx;
  std::vector<int> ty;
  GameOutcome out;
  out.winner = solver.duplicator_wins(tx, ty, k) ? Player::Duplicator : Player::Spoiler;
  if (options.trace) solver.trace(tx, ty, k, out.winner == Player::Duplicator, 0, out.trace);
  if (options.synthesize && out.winner == Player::Spoiler) out.formula = solver.distinguish(tx, ty, k);
  return out;
}

std::optional<Formula> synthesize_distinguisher(const Graph& x, const Graph& y, int k, const SolveOptions& options) {
  SolveOptions opts = options;
  opts.synthesize = true;
  opts.trace = false;
  return solve(x, y, k, opts).formula;
}

std::vector<std::vector<int>> equivalence_classes(const std::vector<Graph>& graphs, int k,
                                                  const SolveOptions& options) {
  const int count = static_cast<int>(graphs.size());
  std::vector<int> parent(static_cast<size_t>(count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      if (find(i) == find(j)) continue;
      if (solve(graphs[i], graphs[j], k, options).winner == Player::Duplicator) parent[find(j)] = find(i);
    }
  std::vector<std::vector<int>> classes;
  std::vector<int> slot(static_cast<size_t>(count), -1);
  for (int i = 0; i < count; ++i) {
    const int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[slot[r]].push_back(i);
  }
  return classes;
}

}  // namespace zol
