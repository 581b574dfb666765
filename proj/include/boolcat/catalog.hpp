#ifndef BOOLCAT_CATALOG_HPP
#define BOOLCAT_CATALOG_HPP

#include <string>
#include <vector>

#include "boolcat/sexpr.hpp"

namespace boolcat {

// Morphism parameter of an equation. `src`/`tgt` are formula-template texts;
// a bare single variable that is still unbound at sampling time is bound
// from the sampled morphism's type.
struct MVarDecl {
  enum class Mode { Plain, Via, Pool };
  std::string name;
  std::string src, tgt;
  Mode mode = Mode::Plain;
  SExpr via;                // Mode::Via: constructed from earlier variables
  std::vector<SExpr> pool;  // Mode::Pool: one of these instantiations
};

struct Equation {
  enum class Expect { Holds, Fails, Skip };

  std::string id;
  std::string level;
  std::string note;
  std::vector<std::string> params;  // free object parameters
  std::vector<MVarDecl> mvars;
  SExpr lhs, rhs;
  Expect snet = Expect::Holds;
  Expect enet = Expect::Holds;
  bool order = false;        // lhs precedes rhs: linking(rhs) within linking(lhs)
  std::string special;       // nonempty: runner-implemented check
};

std::vector<Equation> parse_catalog(std::string_view text);

// The compiled-in catalog (catalog/equations.sexp embedded at build time).
const std::vector<Equation>& builtin_catalog();
const char* embedded_catalog_text();

// Level names in suite order.
const std::vector<std::string>& catalog_levels();

}  // namespace boolcat

#endif
