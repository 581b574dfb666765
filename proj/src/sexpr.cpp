#include "boolcat/sexpr.hpp"

#include <cctype>

namespace boolcat {

const SExpr& SExpr::at(std::size_t i) const {
  if (!is_list || i >= items.size()) throw BoolcatError("malformed s-expression");
  return items[i];
}

const std::string& SExpr::head() const {
  if (!is_list || items.empty() || items[0].is_list)
    throw BoolcatError("s-expression list has no head symbol");
  return items[0].text;
}

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return pos >= text.size();
  }

  SExpr next() {
    skip();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    char c = text[pos];
    if (c == '(') {
      ++pos;
      SExpr list;
      list.is_list = true;
      while (true) {
        skip();
        if (pos >= text.size()) throw ParseError("unclosed '('", pos);
        if (text[pos] == ')') {
          ++pos;
          return list;
        }
        list.items.push_back(next());
      }
    }
    if (c == ')') throw ParseError("unexpected ')'", pos);
    if (c == '"') {
      std::size_t start = ++pos;
      while (pos < text.size() && text[pos] != '"') ++pos;
      if (pos >= text.size()) throw ParseError("unclosed '\"'", pos);
      SExpr tok;
      tok.text = std::string(text.substr(start, pos - start));
      ++pos;
      return tok;
    }
    if (c == '{') {
      std::size_t start = ++pos;
      int depth = 1;
      while (pos < text.size() && depth > 0) {
        if (text[pos] == '{') ++depth;
        if (text[pos] == '}') --depth;
        ++pos;
      }
      if (depth != 0) throw ParseError("unclosed '{'", pos);
      SExpr tok;
      tok.text = std::string(text.substr(start, pos - 1 - start));
      tok.braced = true;
      return tok;
    }
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')' && text[pos] != '{' && text[pos] != '#')
      ++pos;
    SExpr tok;
    tok.text = std::string(text.substr(start, pos - start));
    return tok;
  }
};

// Formula-template parser: lowercase atoms, t/f units, uppercase variables,
// `~` on any subterm, `&` over `|`, parentheses.
struct TemplateParser {
  std::string_view text;
  std::size_t pos = 0;
  const std::map<std::string, Formula>* objects;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  Formula primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of formula template");
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
      return negate(primary());
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '\''))
        ++pos;
      std::string name(text.substr(start, pos - start));
      auto it = objects->find(name);
      if (it == objects->end()) fail("unbound object variable " + name);
      return it->second;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::islower(static_cast<unsigned char>(text[pos])) ||
              std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name(text.substr(start, pos - start));
      if (name == "t") return Formula::top();
      if (name == "f") return Formula::bot();
      return Formula::atom(std::move(name));
    }
    fail(std::string("unexpected character '") + c + "' in formula template");
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

}  // namespace

std::vector<SExpr> parse_sexprs(std::string_view text) {
  Lexer lex{text};
  std::vector<SExpr> out;
  while (!lex.done()) out.push_back(lex.next());
  return out;
}

Formula instantiate_formula(std::string_view text,
                            const std::map<std::string, Formula>& objects) {
  TemplateParser p{text, 0, &objects};
  Formula f = p.or_term();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input in formula template");
  return f;
}

namespace {

Formula formula_arg(const SExpr& s, const ExprEnv& env) {
  if (s.is_list) throw BoolcatError("expected a formula token");
  return instantiate_formula(s.text, env.objects);
}

}  // namespace

MExpr expr_from_sexpr(const SExpr& s, const ExprEnv& env) {
  if (!s.is_list) {
    if (!s.text.empty() && s.text[0] == '$') {
      std::string name = s.text.substr(1);
      auto it = env.mvars.find(name);
      if (it == env.mvars.end()) throw BoolcatError("undeclared morphism variable $" + name);
      return MExpr::var(name, it->second.src, it->second.tgt);
    }
    throw BoolcatError("expected an expression, got symbol '" + s.text + "'");
  }
  const std::string& head = s.head();
  auto sub = [&](std::size_t i) { return expr_from_sexpr(s.at(i), env); };
  if (head == "comp") {
    std::vector<MExpr> chain;
    for (std::size_t i = 1; i < s.items.size(); ++i) chain.push_back(sub(i));
    return comp(std::move(chain));
  }
  if (head == "and") return MExpr::tens_and(sub(1), sub(2));
  if (head == "or") return MExpr::tens_or(sub(1), sub(2));
  if (head == "curry") return MExpr::curry(sub(1));
  if (head == "uncurry") return MExpr::uncurry(sub(1));
  if (head == "dual") return dual_of(sub(1));
  if (head == "plus") return plus_of(sub(1), sub(2));
  if (head == "mid4and")
    return mid4_and(formula_arg(s.at(1), env), formula_arg(s.at(2), env),
                    formula_arg(s.at(3), env), formula_arg(s.at(4), env));
  if (head == "mid4or")
    return mid4_or(formula_arg(s.at(1), env), formula_arg(s.at(2), env),
                   formula_arg(s.at(3), env), formula_arg(s.at(4), env));
  if (head == "reshape-and" || head == "reshape-or") {
    // Compute the coherence recipe on placeholder atoms (one per object
    // variable), then substitute the bound objects: block matching then
    // follows the written templates even when objects coincide.
    const std::string& from_tpl = s.at(1).text;
    const std::string& to_tpl = s.at(2).text;
    std::map<std::string, Formula> markers;
    std::map<std::string, Formula> subst;
    int n = 0;
    for (const auto& [name, value] : env.objects) {
      std::string marker = "zq" + std::to_string(n++);
      markers[name] = Formula::atom(marker);
      subst[marker] = value;
    }
    Formula from = instantiate_formula(from_tpl, markers);
    Formula to = instantiate_formula(to_tpl, markers);
    MExpr recipe = head == "reshape-and" ? and_reshape(from, to) : or_reshape(from, to);
    return substitute_atoms(recipe, subst);
  }
  const Gen* g = gen_by_name(head);
  if (!g) throw BoolcatError("unknown operator '" + head + "'");
  std::vector<Formula> params;
  for (std::size_t i = 1; i < s.items.size(); ++i)
    params.push_back(formula_arg(s.items[i], env));
  return MExpr::gen(*g, std::move(params));
}

}  // namespace boolcat
