#ifndef BOOLCAT_SEXPR_HPP
#define BOOLCAT_SEXPR_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "boolcat/morphism.hpp"

namespace boolcat {

// Minimal s-expressions: lists, bare symbols, and {...} formula tokens.
// `#` starts a comment running to end of line.
struct SExpr {
  bool is_list = false;
  std::string text;          // symbol text ({} stripped from formula tokens)
  bool braced = false;       // token was written {...}
  std::vector<SExpr> items;  // list items

  const SExpr& at(std::size_t i) const;
  const std::string& head() const;  // first symbol of a list
  bool is_symbol(std::string_view s) const { return !is_list && text == s; }
};

std::vector<SExpr> parse_sexprs(std::string_view text);

// Formula templates: the concrete formula grammar extended with uppercase
// object variables and `~` on arbitrary subterms (resolved via negate).
Formula instantiate_formula(std::string_view text, const std::map<std::string, Formula>& objects);

struct ExprEnv {
  std::map<std::string, Formula> objects;
  std::map<std::string, MType> mvars;  // declared morphism variable types
};

// Expression forms: (comp e...), (and e e), (or e e), (curry e), (uncurry e),
// (dual e), (plus e e), (mid4and A B C D), (mid4or A B C D), $name,
// (<generator> A B ...).
MExpr expr_from_sexpr(const SExpr& s, const ExprEnv& env);

}  // namespace boolcat

#endif
