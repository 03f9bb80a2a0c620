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
#include <vector>

#include "zol/fo.hpp"
#include "zol/graph.hpp"

namespace zol {

inline constexpr int kDefaultMaxRounds = 6;

enum class Player { Spoiler, Duplicator };
std::string to_string(Player p);

// A position of EHR(X, Y, k): the vertices chosen so far in each graph.
struct GameState {
  std::vector<int> x;
  std::vector<int> y;
  int rounds_left = 0;
};

struct SolveOptions {
  int max_rounds = kDefaultMaxRounds;
  // Restrict moves to one representative per orbit of the automorphisms that
  // fix the current tuple. Never changes the outcome.
  bool orbit_reduction = false;
  bool synthesize = false;
  bool trace = false;
  // Trace lines beyond this count are elided.
  int trace_limit = 2000;
};

struct GameOutcome {
  Player winner = Player::Duplicator;
  // Winning strategy tree as indented lines, when requested.
  std::vector<std::string> trace;
  // Sentence true in X and false in Y; only for Spoiler wins when requested.
  std::optional<Formula> formula;
};

// Equality and adjacency patterns of the two tuples coincide.
bool partial_iso_holds(const GameState& state, const Graph& x, const Graph& y);

// Exact minimax. Throws BoundError when k exceeds options.max_rounds.
GameOutcome solve(const Graph& x, const Graph& y, int k, const SolveOptions& options = {});

// Sentence of quantifier depth <= k true in x and false in y, or nullopt when
// Duplicator wins. Variables are named x1, x2, ... by the round they bind.
std::optional<Formula> synthesize_distinguisher(const Graph& x, const Graph& y, int k,
                                                const SolveOptions& options = {});

// Partition of indices by k-round Duplicator wins. Classes are ordered by
// their smallest index and list indices increasingly.
std::vector<std::vector<int>> equivalence_classes(const std::vector<Graph>& graphs, int k,
                                                  const SolveOptions& options = {});

}  // namespace zol
