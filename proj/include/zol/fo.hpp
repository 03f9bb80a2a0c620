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
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "zol/graph.hpp"

namespace zol {

// First-order formulas over the vocabulary {=, ~}.
//
// Surface syntax (ASCII):
//   Ax.φ  Ex.φ      quantifiers; the body extends as far right as possible
//   !φ  φ & ψ  φ | ψ  φ -> ψ    precedence ! > & > | > ->; -> is right-assoc
//   x = y  x ~ y    atoms; variables start with a lower-case letter
class Formula {
 public:
  enum class Kind { Exists, Forall, And, Or, Not, Implies, Equal, Adjacent };

  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula negate(Formula a);
  static Formula equal(std::string x, std::string y);
  static Formula adjacent(std::string x, std::string y);
  // Left-nested conjunction/disjunction; parts must be non-empty.
  static Formula conj_all(const std::vector<Formula>& parts);
  static Formula disj_all(const std::vector<Formula>& parts);

  Kind kind() const { return node_->kind; }
  // Bound variable (quantifiers) or the two atom variables.
  const std::string& var() const { return node_->var; }
  const std::string& lhs() const { return node_->var; }
  const std::string& rhs() const { return node_->rhs; }
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }
  // Source position when produced by the parser (1-based), otherwise 0.
  int line() const { return node_->line; }
  int column() const { return node_->column; }

  int depth() const { return node_->depth; }
  std::set<std::string> free_variables() const;
  bool is_sentence() const { return free_variables().empty(); }

  // Structural equality; source positions are ignored.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string var;
    std::string rhs;
    std::shared_ptr<const Formula> left;
    std::shared_ptr<const Formula> right;
    int depth = 0;
    int line = 0;
    int column = 0;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);

  std::shared_ptr<const Node> node_;

  friend class FormulaParser;
};

// Parses a formula; with require_sentence, free variables are rejected.
Formula parse_formula(std::string_view text, bool require_sentence = true);
std::string to_string(const Formula& f);
inline int quantifier_depth(const Formula& f) { return f.depth(); }

// Exact model checking by nested iteration over assignments.
bool evaluate(const Formula& sentence, const Graph& g);
bool evaluate(const Formula& f, const Graph& g, const std::map<std::string, int>& assignment);

// True when every adjacency atom occurs under an even number of negations
// (the antecedent of -> counts as one). Such sentences define properties
// preserved under adding edges on a fixed vertex set.
bool is_syntactically_increasing(const Formula& f);

// One sentence per line; blank lines and '#' comments are skipped.
std::vector<Formula> read_formulas(std::istream& is);

struct CorpusEntry {
  std::string name;
  Formula formula;
  bool increasing = false;
};

// Curated sentences of quantifier depth <= k (k <= 4), at least 20 per depth,
// in a fixed order.
std::vector<CorpusEntry> sentence_corpus(int k);

}  // namespace zol
