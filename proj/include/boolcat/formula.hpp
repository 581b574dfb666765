#ifndef BOOLCAT_FORMULA_HPP
#define BOOLCAT_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boolcat {

struct BoolcatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : BoolcatError {
  ParseError(const std::string& msg, std::size_t pos)
      : BoolcatError(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

struct FormulaNode;

// Negation-normal formulas: negation occurs on atoms only. General negation
// is the function `negate` below, not a constructor.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, NegAtom, Top, Bot, And, Or };

  // Default-constructed formulas are empty placeholders; every accessor
  // assumes a real formula built through the factories below.
  Formula() = default;

  static Formula atom(std::string name);
  static Formula neg_atom(std::string name);
  static Formula top();
  static Formula bot();
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);

  Kind kind() const;
  bool is_leaf() const;
  bool is_atomic() const;
  bool is_unit() const;

  const std::string& atom_name() const;
  const Formula& left() const;
  const Formula& right() const;

  int leaf_count() const;
  int depth() const;

  bool operator==(const Formula& other) const { return equal(*this, other); }
  bool operator!=(const Formula& other) const { return !equal(*this, other); }

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}
  static bool equal(const Formula& a, const Formula& b);

  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
  Formula::Kind kind;
  std::string name;  // Atom/NegAtom only
  Formula left, right;
  int leaf_count = 1;
  int depth = 0;
};

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline bool Formula::is_leaf() const {
  return node_->kind != Kind::And && node_->kind != Kind::Or;
}
inline bool Formula::is_atomic() const {
  return node_->kind == Kind::Atom || node_->kind == Kind::NegAtom;
}
inline bool Formula::is_unit() const {
  return node_->kind == Kind::Top || node_->kind == Kind::Bot;
}
inline const Formula& Formula::left() const { return node_->left; }
inline const Formula& Formula::right() const { return node_->right; }
inline int Formula::leaf_count() const { return node_->leaf_count; }
inline int Formula::depth() const { return node_->depth; }

// De Morgan negation; inverts the argument order of binary connectives.
Formula negate(const Formula& f);

// Concrete syntax: atoms are lowercase identifiers, `~` before atoms only,
// `t`/`f` units, `&` binds tighter than `|`, parentheses. Chains associate
// to the left.
Formula parse_formula(std::string_view text);

// Minimal-paren printing; parse(to_string(f)) == f.
std::string to_string(const Formula& f);

// A sequent is an ordered, nonempty list of formulas.
class Sequent {
 public:
  Sequent() = default;
  explicit Sequent(std::vector<Formula> fs) : formulas_(std::move(fs)) {}

  std::size_t size() const { return formulas_.size(); }
  const Formula& operator[](std::size_t i) const { return formulas_[i]; }
  const std::vector<Formula>& formulas() const { return formulas_; }

  bool operator==(const Sequent& other) const;
  bool operator!=(const Sequent& other) const { return !(*this == other); }

 private:
  std::vector<Formula> formulas_;
};

std::string to_string(const Sequent& s);

// Address of a leaf: formula position plus the L/R path from that root.
struct LeafRef {
  int formula = 0;
  std::string path;  // over {'L','R'}

  bool operator==(const LeafRef& o) const { return formula == o.formula && path == o.path; }
  bool operator<(const LeafRef& o) const {
    return formula != o.formula ? formula < o.formula : path < o.path;
  }
};

std::string to_string(const LeafRef& r);

// Resolves to the subformula at `path`; throws BoolcatError if the path does
// not exist or does not end on a leaf.
const Formula& resolve_leaf(const Sequent& s, const LeafRef& r);
const Formula& resolve_node(const Sequent& s, int formula, std::string_view path);

// Mirror of a path under negation: negate swaps the arguments of every
// binary connective, so a leaf at path p in F sits at flip(p) in ~F.
std::string mirror_path(std::string_view path);

struct LeafInfo {
  LeafRef ref;
  Formula label;  // Atom/NegAtom/Top/Bot leaf
};

// Left-to-right, depth-first leaf enumeration of the whole sequent.
std::vector<LeafInfo> leaves(const Sequent& s);

}  // namespace boolcat

#endif
