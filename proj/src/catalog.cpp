#include "boolcat/catalog.hpp"

#include <algorithm>

namespace boolcat {

namespace {

Equation::Expect expect_from(const std::string& s, const std::string& id) {
  if (s == "holds") return Equation::Expect::Holds;
  if (s == "fails") return Equation::Expect::Fails;
  if (s == "skip") return Equation::Expect::Skip;
  throw BoolcatError("equation " + id + ": bad expectation '" + s + "'");
}

MVarDecl mvar_from(const SExpr& s) {
  if (!s.is_list || s.items.size() < 3)
    throw BoolcatError("morphism variable needs (name src tgt ...)");
  MVarDecl d;
  d.name = s.at(0).text;
  d.src = s.at(1).text;
  d.tgt = s.at(2).text;
  if (s.items.size() > 3) {
    const std::string& mode = s.at(3).text;
    if (mode == "via") {
      d.mode = MVarDecl::Mode::Via;
      d.via = s.at(4);
    } else if (mode == "pool") {
      d.mode = MVarDecl::Mode::Pool;
      for (std::size_t i = 4; i < s.items.size(); ++i) d.pool.push_back(s.items[i]);
      if (d.pool.empty()) throw BoolcatError("empty pool for morphism variable " + d.name);
    } else {
      throw BoolcatError("unknown morphism variable mode '" + mode + "'");
    }
  }
  return d;
}

Equation equation_from(const SExpr& s) {
  Equation eq;
  eq.id = s.at(1).text;
  bool have_lhs = false, have_rhs = false;
  for (std::size_t i = 2; i < s.items.size(); ++i) {
    const SExpr& item = s.items[i];
    const std::string& head = item.head();
    if (head == "level") {
      eq.level = item.at(1).text;
    } else if (head == "note") {
      eq.note = item.at(1).text;
    } else if (head == "params") {
      for (std::size_t k = 1; k < item.items.size(); ++k) eq.params.push_back(item.items[k].text);
    } else if (head == "mvars") {
      for (std::size_t k = 1; k < item.items.size(); ++k)
        eq.mvars.push_back(mvar_from(item.items[k]));
    } else if (head == "lhs") {
      eq.lhs = item.at(1);
      have_lhs = true;
    } else if (head == "rhs") {
      eq.rhs = item.at(1);
      have_rhs = true;
    } else if (head == "expect") {
      eq.snet = expect_from(item.at(1).text, eq.id);
      eq.enet = expect_from(item.at(2).text, eq.id);
    } else if (head == "order") {
      eq.order = true;
    } else if (head == "special") {
      eq.special = item.at(1).text;
    } else {
      throw BoolcatError("equation " + eq.id + ": unknown clause (" + head + " ...)");
    }
  }
  if (eq.level.empty()) throw BoolcatError("equation " + eq.id + " has no level");
  if (eq.special.empty() && (!have_lhs || !have_rhs))
    throw BoolcatError("equation " + eq.id + " needs lhs and rhs");
  return eq;
}

}  // namespace

std::vector<Equation> parse_catalog(std::string_view text) {
  std::vector<Equation> out;
  for (const SExpr& form : parse_sexprs(text)) {
    if (!form.is_list) throw BoolcatError("catalog: unexpected token " + form.text);
    if (form.head() == "catalog") continue;  // version header
    if (form.head() != "eq") throw BoolcatError("catalog: unexpected form (" + form.head() + ")");
    out.push_back(equation_from(form));
  }
  return out;
}

const std::vector<Equation>& builtin_catalog() {
  static const std::vector<Equation> catalog = parse_catalog(embedded_catalog_text());
  return catalog;
}

const std::vector<std::string>& catalog_levels() {
  static const std::vector<std::string> levels = {
      "monoidal", "star", "mix", "B1", "B2", "LK",
      "B3", "B4", "B5", "flat", "contractible", "collapse"};
  return levels;
}

}  // namespace boolcat
