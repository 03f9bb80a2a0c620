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

#include "zol/graph6.hpp"

#include <istream>
#include <ostream>

#include "zol/errors.hpp"

namespace zol {
namespace {

constexpr int kOffset = 63;

void append_size(std::string& out, int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
}

int sextet(std::string_view text, size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", 1, static_cast<int>(pos) + 1);
  int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6: invalid byte", 1, static_cast<int>(pos) + 1);
  return c - kOffset;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  append_size(out, n);
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kOffset));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  size_t pos = 0;
  int64_t n = 0;
  if (sextet(text, 0) != 63) {
    n = sextet(text, 0);
    pos = 1;
  } else if (sextet(text, 1) != 63) {
    for (size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text, i);
    pos = 4;
  } else {
    for (size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text, i);
    pos = 8;
  }
  if (n > (int64_t{1} << 20)) throw BoundError("graph6: graph too large");
  Graph g(static_cast<int>(n));
  const int64_t total = n * (n - 1) / 2;
  const size_t expected = pos + static_cast<size_t>((total + 5) / 6);
  if (text.size() != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) + " bytes, got " +
                         std::to_string(text.size()),
                     1, static_cast<int>(std::min(text.size(), expected)) + 1);
  int64_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = sextet(text, pos + static_cast<size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  if (total % 6 != 0) {
    int pad_mask = (1 << (6 - total % 6)) - 1;
    if (sextet(text, expected - 1) & pad_mask)
      throw ParseError("graph6: nonzero padding bits", 1, static_cast<int>(expected));
  }
  return g;
}

void write_rooted(std::ostream& os, const RootedGraph& rg) {
  os << to_graph6(rg.graph) << '\n' << rg.root << '\n';
}

RootedGraph read_rooted(std::istream& is) {
  std::string g6;
  std::string root_line;
  if (!std::getline(is, g6) || !std::getline(is, root_line))
    throw ParseError("rooted graph: expected graph6 line and root line", 1, 1);
  RootedGraph rg{from_graph6(g6), 0};
  try {
    rg.root = std::stoi(root_line);
  } catch (const std::exception&) {
    throw ParseError("rooted graph: bad root index '" + root_line + "'", 2, 1);
  }
  if (rg.root < 0 || rg.root >= rg.graph.order()) throw ParseError("rooted graph: root out of range", 2, 1);
  return rg;
}

std::vector<Graph> read_graph6_lines(std::istream& is) {
  std::vector<Graph> out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    try {
      out.push_back(from_graph6(t));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, e.column());
    }
  }
  return out;
}

}  // namespace zol
