#include "boolcat/formula.hpp"

#include <algorithm>
#include <cctype>

namespace boolcat {


Formula Formula::atom(std::string name) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::neg_atom(std::string name) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::NegAtom;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::top() {
  static const Formula t = [] {
    auto n = std::make_shared<FormulaNode>();
    n->kind = Kind::Top;
    return Formula(std::move(n));
  }();
  return t;
}

Formula Formula::bot() {
  static const Formula f = [] {
    auto n = std::make_shared<FormulaNode>();
    n->kind = Kind::Bot;
    return Formula(std::move(n));
  }();
  return f;
}

Formula Formula::conj(Formula l, Formula r) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::And;
  n->leaf_count = l.leaf_count() + r.leaf_count();
  n->depth = 1 + std::max(l.depth(), r.depth());
  n->left = std::move(l);
  n->right = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::disj(Formula l, Formula r) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = Kind::Or;
  n->leaf_count = l.leaf_count() + r.leaf_count();
  n->depth = 1 + std::max(l.depth(), r.depth());
  n->left = std::move(l);
  n->right = std::move(r);
  return Formula(std::move(n));
}

const std::string& Formula::atom_name() const {
  if (!is_atomic()) throw BoolcatError("atom_name on non-atomic formula");
  return node_->name;
}

bool Formula::equal(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  if (a.node_->leaf_count != b.node_->leaf_count) return false;
  switch (a.node_->kind) {
    case Kind::Atom:
    case Kind::NegAtom:
      return a.node_->name == b.node_->name;
    case Kind::Top:
    case Kind::Bot:
      return true;
    case Kind::And:
    case Kind::Or:
      return equal(a.left(), b.left()) && equal(a.right(), b.right());
  }
  return false;
}

Formula negate(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return Formula::neg_atom(f.atom_name());
    case Formula::Kind::NegAtom:
      return Formula::atom(f.atom_name());
    case Formula::Kind::Top:
      return Formula::bot();
    case Formula::Kind::Bot:
      return Formula::top();
    case Formula::Kind::And:
      return Formula::disj(negate(f.right()), negate(f.left()));
    case Formula::Kind::Or:
      return Formula::conj(negate(f.right()), negate(f.left()));
  }
  throw BoolcatError("unreachable formula kind");
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::islower(static_cast<unsigned char>(text[pos])) ||
            std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected atom identifier");
    return std::string(text.substr(start, pos - start));
  }

  Formula primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Formula f = or_term();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return f;
    }
    if (c == '~') {
      ++pos;
      skip_ws();
      if (pos < text.size() && text[pos] == '(')
        fail("negation applies to atoms only; use negate()");
      std::size_t save = pos;
      std::string name = ident();
      if (name == "t" || name == "f") {
        pos = save;
        fail("negation applies to atoms only; use negate()");
      }
      return Formula::neg_atom(std::move(name));
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string name = ident();
      if (name == "t") return Formula::top();
      if (name == "f") return Formula::bot();
      return Formula::atom(std::move(name));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Formula and_term() {
    Formula f = primary();
    while (peek() == '&') {
      ++pos;
      f = Formula::conj(f, primary());
    }
    return f;
  }

  Formula or_term() {
    Formula f = and_term();
    while (peek() == '|') {
      ++pos;
      f = Formula::disj(f, and_term());
    }
    return f;
  }
};

void print_rec(const Formula& f, std::string& out, int parent_prec, bool right_child) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.atom_name();
      return;
    case Formula::Kind::NegAtom:
      out += '~';
      out += f.atom_name();
      return;
    case Formula::Kind::Top:
      out += 't';
      return;
    case Formula::Kind::Bot:
      out += 'f';
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      int prec = f.kind() == Formula::Kind::And ? 2 : 1;
      // Left-associative chains need no parens; anything else does.
      bool parens = prec < parent_prec || (prec == parent_prec && right_child);
      if (parens) out += '(';
      print_rec(f.left(), out, prec, false);
      out += f.kind() == Formula::Kind::And ? " & " : " | ";
      print_rec(f.right(), out, prec, true);
      if (parens) out += ')';
      return;
    }
  }
}

void collect_leaves(const Formula& f, int fi, std::string& path, std::vector<LeafInfo>& out) {
  if (f.is_leaf()) {
    out.push_back({LeafRef{fi, path}, f});
    return;
  }
  path.push_back('L');
  collect_leaves(f.left(), fi, path, out);
  path.back() = 'R';
  collect_leaves(f.right(), fi, path, out);
  path.pop_back();
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p{text};
  Formula f = p.or_term();
  if (!p.at_end()) p.fail("trailing input after formula");
  return f;
}

std::string to_string(const Formula& f) {
  std::string out;
  print_rec(f, out, 0, false);
  return out;
}

bool Sequent::operator==(const Sequent& other) const {
  if (formulas_.size() != other.formulas_.size()) return false;
  for (std::size_t i = 0; i < formulas_.size(); ++i)
    if (formulas_[i] != other.formulas_[i]) return false;
  return true;
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s[i]);
  }
  return out;
}

std::string to_string(const LeafRef& r) {
  return std::to_string(r.formula) + ":" + (r.path.empty() ? "." : r.path);
}

const Formula& resolve_node(const Sequent& s, int formula, std::string_view path) {
  if (formula < 0 || static_cast<std::size_t>(formula) >= s.size())
    throw BoolcatError("leaf reference: formula index out of range");
  const Formula* cur = &s[formula];
  for (char c : path) {
    if (cur->is_leaf()) throw BoolcatError("leaf reference: path descends below a leaf");
    if (c == 'L')
      cur = &cur->left();
    else if (c == 'R')
      cur = &cur->right();
    else
      throw BoolcatError("leaf reference: path characters must be L or R");
  }
  return *cur;
}

const Formula& resolve_leaf(const Sequent& s, const LeafRef& r) {
  const Formula& f = resolve_node(s, r.formula, r.path);
  if (!f.is_leaf()) throw BoolcatError("leaf reference resolves to an inner node");
  return f;
}

std::string mirror_path(std::string_view path) {
  std::string out;
  out.reserve(path.size());
  for (char c : path) out += c == 'L' ? 'R' : 'L';
  return out;
}

std::vector<LeafInfo> leaves(const Sequent& s) {
  std::vector<LeafInfo> out;
  std::string path;
  for (std::size_t i = 0; i < s.size(); ++i)
    collect_leaves(s[i], static_cast<int>(i), path, out);
  return out;
}

}  // namespace boolcat
