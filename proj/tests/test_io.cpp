#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boolcat/dot_export.hpp"
#include "boolcat/json_io.hpp"
#include "boolcat/sexpr.hpp"
#include "boolcat/suite.hpp"
#include "test_util.hpp"

using namespace boolcat;
using namespace boolcat::testutil;

TEST_CASE("formula JSON encoding") {
  Formula f = parse_formula("(a | ~b) & t");
  ordered_json j = formula_to_json(f);
  CHECK(j.dump() == R"(["and",["or","a","~b"],"t"])");
  CHECK(formula_from_json(j) == f);
  CHECK_THROWS(formula_from_json(ordered_json::array({"nand", "a", "b"})));
}

TEST_CASE("simple nets round-trip through JSON") {
  SimpleNet n = exa1();
  ordered_json j = net_to_json(n);
  ParsedNet p = net_from_json(j);
  CHECK(!p.extended);
  CHECK(SimpleNet(p.sequent, p.simple_links) == n);
}

TEST_CASE("extended nets round-trip through JSON") {
  ExtendedNet n = exa1_anchored_arrow().net;
  ordered_json j = net_to_json(n);
  ParsedNet p = net_from_json(j);
  CHECK(p.extended);
  CHECK(equal_extended(p.net, n));
}

TEST_CASE("random nets round-trip through JSON") {
  Sampler s(909, 2, 2);
  for (int i = 0; i < 50; ++i) {
    HomX h = s.lift_mutate(s.hom());
    ParsedNet p = net_from_json(net_to_json(h.net));
    CHECK(equal_extended(p.net, h.net));
  }
}

TEST_CASE("malformed net JSON is rejected") {
  CHECK_THROWS(net_from_json(ordered_json{{"links", ordered_json::array()}}));
  ordered_json bad;
  bad["sequent"] = ordered_json::array({"a"});
  bad["links"] = ordered_json::array(
      {ordered_json{{"src", ordered_json{{"i", 0}, {"path", "L"}}},
                    {"dst", ordered_json{{"i", 0}, {"path", ""}}}}});
  CHECK_THROWS(net_from_json(bad));
}

TEST_CASE("DOT export mentions every leaf and link") {
  std::string dot = to_dot(exa1());
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("n0_L -> n3_R") != std::string::npos);

  std::string xdot = to_dot(exa1_anchored_arrow().net);
  CHECK(xdot.find("shape=point") != std::string::npos);
}

TEST_CASE("s-expression parsing") {
  auto forms = parse_sexprs("# comment\n(a b (c {x & y}) \"note text\")\n");
  REQUIRE(forms.size() == 1);
  CHECK(forms[0].items.size() == 4);
  CHECK(forms[0].items[2].items[1].braced);
  CHECK(forms[0].items[3].text == "note text");
  CHECK_THROWS_AS(parse_sexprs("(a"), ParseError);
  CHECK_THROWS_AS(parse_sexprs(")"), ParseError);
}

TEST_CASE("expression s-expressions evaluate against an environment") {
  ExprEnv env;
  env.objects["A"] = parse_formula("a | b");
  env.mvars["f"] = MType{parse_formula("a"), parse_formula("a")};
  auto forms = parse_sexprs("(comp (codiag A) (mix A A) (diag A))");
  MExpr e = expr_from_sexpr(forms[0], env);
  MType t = type_of(e);
  CHECK(t.src == env.objects["A"]);
  CHECK(t.tgt == env.objects["A"]);

  forms = parse_sexprs("(comp $f $f)");
  CHECK(type_of(expr_from_sexpr(forms[0], env)).src == parse_formula("a"));

  forms = parse_sexprs("(medial {~A} B C D)");
  env.objects["B"] = env.objects["C"] = env.objects["D"] = parse_formula("t");
  MExpr m = expr_from_sexpr(forms[0], env);
  CHECK(type_of(m).src ==
        Formula::disj(Formula::conj(negate(parse_formula("a | b")), Formula::top()),
                      Formula::conj(Formula::top(), Formula::top())));

  CHECK_THROWS(expr_from_sexpr(parse_sexprs("($g)")[0], env));
  CHECK_THROWS(expr_from_sexpr(parse_sexprs("(frobnicate a)")[0], env));
}

TEST_CASE("elaborated expressions agree across the surface syntax") {
  ExprEnv env;
  env.objects["A"] = parse_formula("a");
  MExpr direct = plus_of(MExpr::gen(Gen::Id, {parse_formula("a")}),
                         MExpr::gen(Gen::Id, {parse_formula("a")}));
  MExpr parsed = expr_from_sexpr(parse_sexprs("(plus (id A) (id A))")[0], env);
  CHECK(elaborate<SNetCat>(direct).net == elaborate<SNetCat>(parsed).net);
}
