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

#include "zol/fo.hpp"

#include <cctype>
#include <istream>
#include <utility>

#include "zol/errors.hpp"

namespace zol {

Formula Formula::make(Node n) {
  switch (n.kind) {
    case Kind::Exists:
    case Kind::Forall:
      n.depth = n.left->depth() + 1;
      break;
    case Kind::Not:
      n.depth = n.left->depth();
      break;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      n.depth = std::max(n.left->depth(), n.right->depth());
      break;
    case Kind::Equal:
    case Kind::Adjacent:
      n.depth = 0;
      break;
  }
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::exists(std::string var, Formula body) {
  return make({Kind::Exists, std::move(var), {}, std::make_shared<const Formula>(std::move(body)), nullptr});
}
Formula Formula::forall(std::string var, Formula body) {
  return make({Kind::Forall, std::move(var), {}, std::make_shared<const Formula>(std::move(body)), nullptr});
}
Formula Formula::conj(Formula a, Formula b) {
  return make({Kind::And, {}, {}, std::make_shared<const Formula>(std::move(a)),
               std::make_shared<const Formula>(std::move(b))});
}
Formula Formula::disj(Formula a, Formula b) {
  return make({Kind::Or, {}, {}, std::make_shared<const Formula>(std::move(a)),
               std::make_shared<const Formula>(std::move(b))});
}
Formula Formula::implies(Formula a, Formula b) {
  return make({Kind::Implies, {}, {}, std::make_shared<const Formula>(std::move(a)),
               std::make_shared<const Formula>(std::move(b))});
}
Formula Formula::negate(Formula a) {
  return make({Kind::Not, {}, {}, std::make_shared<const Formula>(std::move(a)), nullptr});
}
Formula Formula::equal(std::string x, std::string y) { return make({Kind::Equal, std::move(x), std::move(y), nullptr, nullptr}); }
Formula Formula::adjacent(std::string x, std::string y) {
  return make({Kind::Adjacent, std::move(x), std::move(y), nullptr, nullptr});
}

Formula Formula::conj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) throw PreconditionError("conj_all: empty conjunction");
  Formula f = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) f = conj(f, parts[i]);
  return f;
}

Formula Formula::disj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) throw PreconditionError("disj_all: empty disjunction");
  Formula f = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) f = disj(f, parts[i]);
  return f;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.depth() != b.depth()) return false;
  switch (a.kind()) {
    case Formula::Kind::Equal:
    case Formula::Kind::Adjacent:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return a.var() == b.var() && a.left() == b.left();
    case Formula::Kind::Not:
      return a.left() == b.left();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

namespace {

void collect_free(const Formula& f, std::multiset<std::string>& bound, std::set<std::string>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Equal:
    case K::Adjacent:
      if (!bound.count(f.lhs())) out.insert(f.lhs());
      if (!bound.count(f.rhs())) out.insert(f.rhs());
      return;
    case K::Exists:
    case K::Forall: {
      auto it = bound.insert(f.var());
      collect_free(f.left(), bound, out);
      bound.erase(it);
      return;
    }
    case K::Not:
      collect_free(f.left(), bound, out);
      return;
    default:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
  }
}

}  // namespace

std::set<std::string> Formula::free_variables() const {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  collect_free(*this, bound, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = implication();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  using K = Formula::Kind;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }
  int column() const { return static_cast<int>(pos_ - line_start_) + 1; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        line_start_ = pos_ + 1;
      }
      ++pos_;
    }
  }
  bool peek(std::string_view tok) {
    skip_space();
    return text_.substr(pos_).starts_with(tok);
  }
  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  Formula with_pos(Formula f, int line, int col) {
    auto n = *f.node_;
    n.line = line;
    n.column = col;
    return Formula(std::make_shared<const Formula::Node>(std::move(n)));
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept("->")) return Formula::implies(lhs, implication());
    return lhs;
  }
  Formula disjunction() {
    Formula f = conjunction();
    while (accept("|")) f = Formula::disj(f, conjunction());
    return f;
  }
  Formula conjunction() {
    Formula f = unary();
    while (accept("&")) f = Formula::conj(f, unary());
    return f;
  }
  Formula unary() {
    skip_space();
    const int line = line_;
    const int col = column();
    if (accept("!")) return with_pos(Formula::negate(unary()), line, col);
    if (peek("A") || peek("E")) {
      const bool universal = text_[pos_] == 'A';
      ++pos_;
      std::string var = identifier();
      expect(".");
      Formula body = implication();
      return with_pos(universal ? Formula::forall(var, body) : Formula::exists(var, body), line, col);
    }
    if (accept("(")) {
      Formula f = implication();
      expect(")");
      return f;
    }
    std::string x = identifier();
    Formula atom = [&] {
      if (accept("=")) return Formula::equal(x, identifier());
      if (accept("~")) return Formula::adjacent(x, identifier());
      fail("expected '=' or '~' after variable '" + x + "'");
    }();
    return with_pos(atom, line, col);
  }
  std::string identifier() {
    skip_space();
    size_t start = pos_;
    if (pos_ >= text_.size() || !(std::islower(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      fail(pos_ >= text_.size() ? "unexpected end of input" : "expected variable name");
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  size_t line_start_ = 0;
};

namespace {

// First atom (in source order) mentioning an unbound variable.
const Formula* first_unbound(const Formula& f, std::multiset<std::string>& bound, std::string& name) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Equal:
    case K::Adjacent:
      if (!bound.count(f.lhs())) {
        name = f.lhs();
        return &f;
      }
      if (!bound.count(f.rhs())) {
        name = f.rhs();
        return &f;
      }
      return nullptr;
    case K::Exists:
    case K::Forall: {
      auto it = bound.insert(f.var());
      auto r = first_unbound(f.left(), bound, name);
      bound.erase(it);
      return r;
    }
    case K::Not:
      return first_unbound(f.left(), bound, name);
    default:
      if (auto r = first_unbound(f.left(), bound, name)) return r;
      return first_unbound(f.right(), bound, name);
  }
}

}  // namespace

Formula parse_formula(std::string_view text, bool require_sentence) {
  Formula f = FormulaParser(text).parse();
  if (require_sentence) {
    std::multiset<std::string> bound;
    std::string name;
    if (const Formula* atom = first_unbound(f, bound, name))
      throw ParseError("unbound variable '" + name + "'", atom->line(), atom->column());
  }
  return f;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

bool is_quantifier(const Formula& f) {
  return f.kind() == Formula::Kind::Exists || f.kind() == Formula::Kind::Forall;
}

bool is_binary(const Formula& f) {
  using K = Formula::Kind;
  return f.kind() == K::And || f.kind() == K::Or || f.kind() == K::Implies;
}

// `tail` is true when nothing follows f inside its enclosing group, so a
// quantifier there may stay bare: its scope runs to the end of the group anyway.
void print(const Formula& f, std::string& out, bool tail);

void print_wrapped(const Formula& f, std::string& out) {
  out += '(';
  print(f, out, true);
  out += ')';
}

void print(const Formula& f, std::string& out, bool tail) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Equal:
      out += f.lhs() + "=" + f.rhs();
      return;
    case K::Adjacent:
      out += f.lhs() + "~" + f.rhs();
      return;
    case K::Exists:
    case K::Forall:
      out += f.kind() == K::Exists ? "E" : "A";
      out += f.var() + ".";
      if (is_binary(f.left()))
        print_wrapped(f.left(), out);
      else
        print(f.left(), out, true);
      return;
    case K::Not:
      out += "!";
      if (is_binary(f.left()) || (is_quantifier(f.left()) && !tail))
        print_wrapped(f.left(), out);
      else
        print(f.left(), out, tail);
      return;
    case K::And:
    case K::Or:
    case K::Implies: {
      // & and | associate to the left, so a left operand of the same kind needs no parentheses.
      const Formula& l = f.left();
      const bool same = f.kind() != K::Implies && l.kind() == f.kind();
      if (!same && (is_binary(l) || is_quantifier(l)))
        print_wrapped(l, out);
      else
        print(l, out, false);
      out += f.kind() == K::And ? " & " : f.kind() == K::Or ? " | " : " -> ";
      const Formula& r = f.right();
      if (is_binary(r) || (is_quantifier(r) && !tail))
        print_wrapped(r, out);
      else
        print(r, out, tail);
      return;
    }
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out, true);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Formula with variables resolved to assignment slots.
struct Compiled {
  Formula::Kind kind;
  int a = -1;  // atom slot / quantified slot
  int b = -1;
  std::unique_ptr<Compiled> left;
  std::unique_ptr<Compiled> right;
};

std::unique_ptr<Compiled> compile(const Formula& f, std::vector<std::pair<std::string, int>>& scope,
                                  int& next_slot) {
  using K = Formula::Kind;
  auto c = std::make_unique<Compiled>();
  c->kind = f.kind();
  auto lookup = [&](const std::string& name) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == name) return it->second;
    throw PreconditionError("evaluate: free variable '" + name + "' has no assignment");
  };
  switch (f.kind()) {
    case K::Equal:
    case K::Adjacent:
      c->a = lookup(f.lhs());
      c->b = lookup(f.rhs());
      break;
    case K::Exists:
    case K::Forall:
      c->a = next_slot++;
      scope.emplace_back(f.var(), c->a);
      c->left = compile(f.left(), scope, next_slot);
      scope.pop_back();
      break;
    case K::Not:
      c->left = compile(f.left(), scope, next_slot);
      break;
    default:
      c->left = compile(f.left(), scope, next_slot);
      c->right = compile(f.right(), scope, next_slot);
  }
  return c;
}

bool eval(const Compiled& c, const Graph& g, std::vector<int>& env) {
  using K = Formula::Kind;
  switch (c.kind) {
    case K::Equal:
      return env[c.a] == env[c.b];
    case K::Adjacent:
      return env[c.a] != env[c.b] && g.adjacent(env[c.a], env[c.b]);
    case K::Exists:
      for (int v = 0; v < g.order(); ++v) {
        env[c.a] = v;
        if (eval(*c.left, g, env)) return true;
      }
      return false;
    case K::Forall:
      for (int v = 0; v < g.order(); ++v) {
        env[c.a] = v;
        if (!eval(*c.left, g, env)) return false;
      }
      return true;
    case K::Not:
      return !eval(*c.left, g, env);
    case K::And:
      return eval(*c.left, g, env) && eval(*c.right, g, env);
    case K::Or:
      return eval(*c.left, g, env) || eval(*c.right, g, env);
    case K::Implies:
      return !eval(*c.left, g, env) || eval(*c.right, g, env);
  }
  return false;
}

}  // namespace

bool evaluate(const Formula& f, const Graph& g, const std::map<std::string, int>& assignment) {
  std::vector<std::pair<std::string, int>> scope;
  std::vector<int> env;
  for (const auto& [name, v] : assignment) {
    if (v < 0 || v >= g.order()) throw PreconditionError("evaluate: assignment out of range for '" + name + "'");
    scope.emplace_back(name, static_cast<int>(env.size()));
    env.push_back(v);
  }
  int next_slot = static_cast<int>(env.size());
  auto compiled = compile(f, scope, next_slot);
  env.resize(static_cast<size_t>(next_slot), 0);
  return eval(*compiled, g, env);
}

bool evaluate(const Formula& sentence, const Graph& g) {
  auto free = sentence.free_variables();
  if (!free.empty()) throw PreconditionError("evaluate: formula has free variable '" + *free.begin() + "'");
  return evaluate(sentence, g, {});
}

namespace {

bool increasing_at(const Formula& f, bool positive) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Equal:
      return true;
    case K::Adjacent:
      return positive;
    case K::Exists:
    case K::Forall:
      return increasing_at(f.left(), positive);
    case K::Not:
      return increasing_at(f.left(), !positive);
    case K::Implies:
      return increasing_at(f.left(), !positive) && increasing_at(f.right(), positive);
    default:
      return increasing_at(f.left(), positive) && increasing_at(f.right(), positive);
  }
}

}  // namespace

bool is_syntactically_increasing(const Formula& f) { return increasing_at(f, true); }

std::vector<Formula> read_formulas(std::istream& is) {
  std::vector<Formula> out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto hash = line.find('#');
    std::string body = line.substr(0, hash);
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_formula(body));
    } catch (const ParseError& e) {
      std::string msg = e.what();
      msg = msg.substr(msg.find(": ") + 2);
      throw ParseError(msg, line_no, e.column());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corpus

namespace {

struct Seed {
  const char* name;
  const char* text;
};

constexpr Seed kDepth1[] = {
    {"nonempty", "Ex.x=x"},
    {"all-self-equal", "Ax.x=x"},
    {"irreflexive", "Ax.!(x~x)"},
    {"some-loop", "Ex.x~x"},
    {"some-self-distinct", "Ex.!(x=x)"},
    {"empty-graph", "Ax.!(x=x)"},
    {"nonempty-loopless", "Ex.(x=x & !(x~x))"},
    {"all-eq-or-loop", "Ax.(x=x | x~x)"},
    {"nonempty-and-total", "(Ex.x=x) & (Ax.x=x)"},
    {"nonempty-or-loop", "(Ex.x=x) | (Ex.x~x)"},
    {"loop-implies-all-loops", "(Ex.x~x) -> (Ax.x~x)"},
    {"not-nonempty", "!(Ex.x=x)"},
    {"not-all-loops", "!(Ax.x~x)"},
    {"some-loop-implies-eq", "Ex.(x~x -> x=x)"},
    {"loops-imply-distinct", "Ax.(x~x -> !(x=x))"},
    {"some-eq-or-loop", "Ex.(x=x | x~x)"},
    {"all-eq-and-loopless", "Ax.(x=x & !(x~x))"},
    {"total-implies-nonempty", "(Ax.x=x) -> (Ex.x=x)"},
    {"some-loopless", "Ex.!(x~x)"},
    {"excluded-middle", "Ax.(x~x | !(x~x))"},
};

constexpr Seed kDepth2[] = {
    {"has-edge", "Ex.Ey.x~y"},
    {"edgeless", "Ax.Ay.!(x~y)"},
    {"at-least-2", "Ex.Ey.!(x=y)"},
    {"at-most-1", "Ax.Ay.x=y"},
    {"complete", "Ax.Ay.(x=y | x~y)"},
    {"has-non-edge", "Ex.Ey.(!(x=y) & !(x~y))"},
    {"dominating-vertex", "Ex.Ay.(x=y | x~y)"},
    {"isolated-vertex", "Ex.Ay.!(x~y)"},
    {"no-isolated-vertex", "Ax.Ey.x~y"},
    {"all-have-non-neighbour", "Ax.Ey.(!(x=y) & !(x~y))"},
    {"all-eq-or-adjacent-some", "Ax.Ey.(x=y | x~y)"},
    {"vertex-with-nbr-and-non-nbr", "Ex.((Ey.x~y) & (Ey.(!(x~y) & !(x=y))))"},
    {"edge-and-non-edge", "(Ex.Ey.x~y) & (Ex.Ey.(!(x~y) & !(x=y)))"},
    {"isolated-or-no-isolated", "(Ex.Ay.!(x~y)) | (Ax.Ey.x~y)"},
    {"nbr-implies-non-nbr", "Ax.((Ey.x~y) -> (Ey.(!(x=y) & !(x~y))))"},
    {"some-pair-adjacent-or-equal", "Ex.Ey.(x~y | x=y)"},
    {"symmetric", "Ax.Ay.(x~y -> y~x)"},
    {"exactly-one-vertex", "Ex.Ay.x=y"},
    {"not-has-edge", "!(Ex.Ey.x~y)"},
    {"edgeless-alt", "Ax.Ay.(x=y | !(x~y))"},
    {"distinct-edge", "Ex.Ey.(x~y & !(x=y))"},
    {"no-isolated-and-non-edge", "(Ax.Ey.x~y) & (Ex.Ey.(!(x=y) & !(x~y)))"},
};

constexpr Seed kDepth3[] = {
    {"triangle", "Ex.Ey.Ez.(x~y & y~z & x~z)"},
    {"at-least-3", "Ex.Ey.Ez.(!(x=y) & !(y=z) & !(x=z))"},
    {"independent-3", "Ex.Ey.Ez.(!(x=y) & !(y=z) & !(x=z) & !(x~y) & !(y~z) & !(x~z))"},
    {"induced-p3", "Ex.Ey.Ez.(x~y & y~z & !(x~z) & !(x=z))"},
    {"every-edge-in-triangle", "Ax.Ay.(x~y -> Ez.(x~z & y~z))"},
    {"diameter-at-most-2", "Ax.Ay.(x=y | x~y | Ez.(x~z & z~y))"},
    {"min-degree-2", "Ax.Ey.Ez.(x~y & x~z & !(y=z))"},
    {"max-degree-at-least-2", "Ex.Ey.Ez.(x~y & x~z & !(y=z))"},
    {"at-most-2", "Ax.Ay.Az.(x=y | x=z | y=z)"},
    {"common-neighbours", "Ax.Ay.(!(x=y) -> Ez.(x~z & y~z))"},
    {"edge-outside-triangles", "Ex.Ey.(x~y & Az.(z=x | z=y | !(z~x) | !(z~y)))"},
    {"every-vertex-in-triangle-3", "Ax.Ey.Ez.(x~y & y~z & x~z)"},
    {"vertex-degree-at-most-1", "Ex.Ay.Az.((x~y & x~z) -> y=z)"},
    {"cluster-graph", "Ax.Ay.Az.((x~y & x~z) -> (y=z | y~z))"},
    {"leaf", "Ex.Ey.(x~y & Az.(x~z -> z=y))"},
    {"edges-have-neighbours", "Ax.Ay.(x~y -> Ez.(!(z=x) & !(z=y) & (z~x | z~y)))"},
    {"radius-at-most-2", "Ex.Ay.(x=y | x~y | Ez.(x~z & z~y))"},
    {"triangle-free", "Ax.Ay.Az.!(x~y & y~z & x~z)"},
    {"edge-plus-far-vertex", "Ex.Ey.Ez.(x~y & !(x~z) & !(y~z) & !(x=z) & !(y=z))"},
    {"nbr-with-other-nbr", "Ax.Ey.(x~y & Ez.(y~z & !(z=x)))"},
    {"path-length-2", "Ex.Ey.Ez.(x~y & y~z & !(x=z))"},
};

constexpr Seed kDepth4[] = {
    {"k4", "Ex.Ey.Ez.Et.(x~y & x~z & x~t & y~z & y~t & z~t)"},
    {"at-least-4", "Ex.Ey.Ez.Et.(!(x=y) & !(x=z) & !(x=t) & !(y=z) & !(y=t) & !(z=t))"},
    {"every-vertex-in-triangle", "Ax.Ey.Ez.(x~y & y~z & (Et.x~z))"},
    {"c4", "Ex.Ey.Ez.Et.(x~y & y~z & z~t & t~x & !(x=z) & !(y=t))"},
    {"p4", "Ex.Ey.Ez.Et.(x~y & y~z & z~t & !(x=z) & !(y=t) & !(x=t))"},
    {"claw", "Ex.Ey.Ez.Et.(x~y & x~z & x~t & !(y=z) & !(y=t) & !(z=t))"},
    {"min-degree-3", "Ax.Ey.Ez.Et.(x~y & x~z & x~t & !(y=z) & !(y=t) & !(z=t))"},
    {"diamond", "Ex.Ey.Ez.Et.(x~y & x~z & y~z & t~y & t~z & !(t=x))"},
    {"triples-have-common-nbr", "Ax.Ay.Az.((!(x=y) & !(y=z) & !(x=z)) -> Et.(t~x & t~y & t~z))"},
    {"edges-in-two-triangles", "Ax.Ay.(x~y -> Ez.Et.(x~z & y~z & x~t & y~t & !(z=t)))"},
    {"independent-4",
     "Ex.Ey.Ez.Et.(!(x=y) & !(x=z) & !(x=t) & !(y=z) & !(y=t) & !(z=t) & !(x~y) & !(x~z) & !(x~t) & !(y~z) & "
     "!(y~t) & !(z~t))"},
    {"at-most-3", "Ax.Ay.Az.At.(x=y | x=z | x=t | y=z | y=t | z=t)"},
    {"non-adjacent-two-common", "Ex.Ey.(!(x=y) & !(x~y) & (Ez.Et.(x~z & y~z & x~t & y~t & !(z=t))))"},
    {"walk-distance-3", "Ax.Ay.(x=y | x~y | Ez.(x~z & (Et.(z~t & t~y))))"},
    {"centre-walk-distance-3", "Ex.Ay.(x=y | x~y | Ez.(x~z & (Et.(z~t & t~y))))"},
    {"every-vertex-on-c4", "Ax.Ey.Ez.Et.(x~y & y~z & z~t & t~x & !(x=z) & !(y=t))"},
    {"paw", "Ex.Ey.Ez.Et.(x~y & y~z & x~z & t~x & !(t~y) & !(t~z) & !(t=y) & !(t=z))"},
    {"k4-free", "Ax.Ay.Az.At.!(x~y & x~z & x~t & y~z & y~t & z~t)"},
    {"two-disjoint-edges", "Ex.Ey.Ez.Et.(x~y & z~t & !(x=z) & !(x=t) & !(y=z) & !(y=t))"},
    {"induced-2k2",
     "Ex.Ey.Ez.Et.(x~y & z~t & !(x~z) & !(x~t) & !(y~z) & !(y~t) & !(x=z) & !(x=t) & !(y=z) & !(y=t))"},
    {"nbr-of-degree-3", "Ax.Ey.(x~y & (Ez.Et.(y~z & y~t & !(z=t) & !(z=x) & !(t=x))))"},
};

template <size_t N>
void append(std::vector<CorpusEntry>& out, const Seed (&seeds)[N], int expected_depth) {
  for (const auto& s : seeds) {
    Formula f = parse_formula(s.text);
    if (f.depth() != expected_depth)
      throw Error(std::string("corpus sentence '") + s.name + "' has depth " + std::to_string(f.depth()));
    out.push_back({s.name, f, is_syntactically_increasing(f)});
  }
}

}  // namespace

std::vector<CorpusEntry> sentence_corpus(int k) {
  if (k < 0 || k > 4) throw BoundError("sentence_corpus: depth bound must be in 0..4");
  std::vector<CorpusEntry> out;
  if (k >= 1) append(out, kDepth1, 1);
  if (k >= 2) append(out, kDepth2, 2);
  if (k >= 3) append(out, kDepth3, 3);
  if (k >= 4) append(out, kDepth4, 4);
  return out;
}

}  // namespace zol
