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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "zol/graph.hpp"

namespace zol {

// graph6 encoding as used by nauty: N(n) followed by the upper triangle in
// column order, six bits per printable byte (offset 63). No trailing newline.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

struct RootedGraph {
  Graph graph;
  int root = 0;

  friend bool operator==(const RootedGraph&, const RootedGraph&) = default;
};

// Rooted graphs are stored as a graph6 line followed by a root-index line.
void write_rooted(std::ostream& os, const RootedGraph& rg);
RootedGraph read_rooted(std::istream& is);

// Reads one graph6 graph per non-empty line; lines starting with '#' are skipped.
std::vector<Graph> read_graph6_lines(std::istream& is);

}  // namespace zol
