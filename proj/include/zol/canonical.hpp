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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zol/graph.hpp"

namespace zol {

inline constexpr int kDefaultCanonicalBound = 16;
inline constexpr int kMaxCanonicalBound = 64;

// Isomorphism certificate: equal iff the (vertex-coloured) graphs are isomorphic.
struct Certificate {
  int n = 0;
  std::vector<int> colour_sizes;
  std::vector<uint64_t> bits;  // upper triangle of the canonically relabeled adjacency matrix

  friend bool operator==(const Certificate&, const Certificate&) = default;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;

  std::string hex() const;
};

struct CanonicalLabeling {
  Certificate certificate;
  // labeling[i] is the original vertex placed at canonical position i.
  std::vector<int> labeling;
  // Automorphisms found during the search, as permutations perm[v] = image of v.
  // They generate a subgroup of the colour-preserving automorphism group.
  std::vector<std::vector<int>> generators;

  // Input graph relabeled so that vertex labeling[i] becomes i.
  Graph apply(const Graph& g) const;
};

// Canonical labeling of g under an ordered colouring: colours[v] is a small
// non-negative integer, and isomorphisms must preserve colours. Ordered
// partition refinement with individualisation and automorphism pruning.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colours,
                                     int bound = kDefaultCanonicalBound);

Certificate canonical_form(const Graph& g, int bound = kDefaultCanonicalBound);
// Isomorphisms must map root to root.
Certificate rooted_canonical_form(const Graph& g, int root, int bound = kDefaultCanonicalBound);

// Orbits of the group generated by the given permutations restricted to those
// fixing every vertex in `fixed`; returns orbit representative per vertex.
std::vector<int> orbits_fixing(int n, std::span<const std::vector<int>> generators,
                               std::span<const int> fixed);

}  // namespace zol
