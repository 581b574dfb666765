#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boolcat/suite.hpp"
#include "test_util.hpp"

using namespace boolcat;
using namespace boolcat::testutil;

namespace {

Formula F(const char* s) { return parse_formula(s); }

Hom elab(const MExpr& e) { return elaborate<SNetCat>(e); }

}  // namespace

TEST_CASE("identity net on an atom is a single link") {
  SimpleNet id_a = generator_net(Gen::Id, {F("a")});
  CHECK(id_a.sequent() == seq_of({"~a", "a"}));
  REQUIRE(id_a.links().size() == 1);
  CHECK(id_a.link_refs()[0] == LinkRef{ref(0, ""), ref(1, "")});
}

TEST_CASE("identity bundle follows leaf polarity") {
  SimpleNet id_f = generator_net(Gen::Id, {F("(~a | t) & b")});
  // Sequent: ~b | (f & a), (~a | t) & b.
  auto refs = id_f.link_refs();
  std::set<LinkRef> links(refs.begin(), refs.end());
  std::set<LinkRef> expect{
      {ref(1, "LL"), ref(0, "RR")},   // ~a upward
      {ref(1, "LR"), ref(1, "LR")},   // t self
      {ref(0, "L"), ref(1, "R")},     // b downward
  };
  CHECK(links == expect);
}

TEST_CASE("medial net is four straight bundles") {
  SimpleNet m = generator_net(Gen::Medial, {F("a"), F("b"), F("c"), F("d")});
  CHECK(m.sequent() ==
        seq_of({"(~d | ~c) & (~b | ~a)", "(a | c) & (b | d)"}));
  auto refs = m.link_refs();
  std::set<LinkRef> links(refs.begin(), refs.end());
  std::set<LinkRef> expect{
      {ref(0, "RR"), ref(1, "LL")},  // a
      {ref(0, "RL"), ref(1, "RL")},  // b
      {ref(0, "LR"), ref(1, "LR")},  // c
      {ref(0, "LL"), ref(1, "RR")},  // d
  };
  CHECK(links == expect);
}

TEST_CASE("projection and coprojection nets") {
  SimpleNet p = generator_net(Gen::Proj, {F("a")});
  CHECK(p.sequent() == seq_of({"~a", "t"}));
  REQUIRE(p.links().size() == 1);
  CHECK(p.link_refs()[0] == LinkRef{ref(1, ""), ref(1, "")});

  SimpleNet cp = generator_net(Gen::Coproj, {F("a & b")});
  CHECK(cp.sequent() == seq_of({"t", "a & b"}));
  REQUIRE(cp.links().size() == 1);  // just the t self-link
}

TEST_CASE("diag links each source leaf to both copies") {
  SimpleNet d = generator_net(Gen::Diag, {F("a")});
  auto refs = d.link_refs();
  std::set<LinkRef> links(refs.begin(), refs.end());
  std::set<LinkRef> expect{
      {ref(0, ""), ref(1, "L")},
      {ref(0, ""), ref(1, "R")},
  };
  CHECK(links == expect);
}

TEST_CASE("every generator yields a valid and correct net") {
  std::vector<Formula> objs{F("a"), F("~b"), F("t"), F("f"), F("a & (b | ~a)"), F("~a | b")};
  for (const auto& gi : {Gen::Id, Gen::Assoc, Gen::AssocInv, Gen::Twist, Gen::Runit,
                         Gen::RunitInv, Gen::Lunit, Gen::LunitInv, Gen::Coassoc,
                         Gen::CoassocInv, Gen::Cotwist, Gen::Corunit, Gen::CorunitInv,
                         Gen::Colunit, Gen::ColunitInv, Gen::SwitchS, Gen::SwitchL,
                         Gen::SwitchM, Gen::SwitchR, Gen::Medial, Gen::NullaryMedial,
                         Gen::NullaryComedial, Gen::Diag, Gen::Codiag, Gen::Proj, Gen::Coproj,
                         Gen::Nid, Gen::Conid}) {
    int arity = gen_arity(gi);
    for (std::size_t pick = 0; pick < objs.size(); ++pick) {
      std::vector<Formula> params;
      for (int i = 0; i < arity; ++i) params.push_back(objs[(pick + i) % objs.size()]);
      SimpleNet net = generator_net(gi, params);
      CHECK(validate(net.sequent(), net.link_refs()).empty());
      CHECK(is_correct(net));
      MType t = gen_type(gi, params);
      CHECK(net.sequent()[0] == negate(t.src));
      CHECK(net.sequent()[1] == t.tgt);
    }
  }
}

TEST_CASE("derived generators expand to their declared types") {
  std::vector<Formula> objs{F("a"), F("b | ~c"), F("t")};
  for (const auto& gi :
       {Gen::ProjL, Gen::ProjR, Gen::CoprojL, Gen::CoprojR, Gen::Mix, Gen::E1, Gen::E2,
        Gen::TensorMap, Gen::CotensorMap, Gen::Medial3, Gen::Comedial3, Gen::Diag3,
        Gen::Codiag3}) {
    int arity = gen_arity(gi);
    std::vector<Formula> params;
    for (int i = 0; i < arity; ++i) params.push_back(objs[i % objs.size()]);
    MType declared = gen_type(gi, params);
    MType expanded = type_of(expand_derived(gi, params));
    CHECK(declared.src == expanded.src);
    CHECK(declared.tgt == expanded.tgt);
    Hom h = elab(MExpr::gen(gi, params));
    CHECK(h.src == declared.src);
    CHECK(h.tgt == declared.tgt);
    CHECK(is_correct(h.net));
  }
}

TEST_CASE("composition identity laws") {
  Sampler s(8080, 2, 2);
  for (int i = 0; i < 100; ++i) {
    Hom f = s.hom();
    Hom idl{f.tgt, f.tgt, generator_net(Gen::Id, {f.tgt})};
    Hom idr{f.src, f.src, generator_net(Gen::Id, {f.src})};
    CHECK(hom_compose<SNetCat>(idl, f).net == f.net);
    CHECK(hom_compose<SNetCat>(f, idr).net == f.net);
  }
}

TEST_CASE("composition type errors carry the mismatch") {
  Hom f{F("a"), F("b"), SimpleNet(SimpleNet::Unchecked{}, seq_of({"~a", "b"}),
                                  {{0, 1}})};
  Hom g{F("c"), F("a"), SimpleNet(SimpleNet::Unchecked{}, seq_of({"~c", "a"}), {{0, 1}})};
  CHECK_THROWS_AS(hom_compose<SNetCat>(f, f), TypeError);
  CHECK_NOTHROW(hom_compose<SNetCat>(f, g));
}

TEST_CASE("composition is associative on random correct triples") {
  Sampler s(1234, 3, 3);
  int done = 0;
  for (int round = 0; round < 1200 && done < 300; ++round) {
    try {
      Hom f = s.hom();
      Hom g = s.hom_from(f.tgt);
      Hom h = s.hom_from(g.tgt);
      if (!is_correct(f.net) || !is_correct(g.net) || !is_correct(h.net)) continue;
      Hom left = hom_compose<SNetCat>(hom_compose<SNetCat>(h, g), f);
      Hom right = hom_compose<SNetCat>(h, hom_compose<SNetCat>(g, f));
      ++done;
      CHECK(left.net == right.net);
      // Composition preserves correctness.
      CHECK(is_correct(left.net));
    } catch (const PruningBudgetError&) {
      continue;  // oversized sample; resample
    }
  }
  CHECK(done == 300);
}

TEST_CASE("the worked composition reproduces the displayed net") {
  Hom f = exa1_as_arrow();
  Hom g = exa2_as_arrow();
  REQUIRE(f.tgt == g.src);
  Hom r = hom_compose<SNetCat>(g, f);
  SimpleNet expected(Sequent({r.net.sequent()[0], r.net.sequent()[1]}),
                     exa1_exa2_expected_links());
  CHECK(r.net == expected);
}

TEST_CASE("curry and uncurry are inverse") {
  Sampler s(4321, 2, 2);
  int done = 0;
  for (int round = 0; round < 600 && done < 200; ++round) {
    Formula a = s.formula();
    Formula b = s.formula();
    Hom f = s.hom_from(Formula::conj(a, b));
    ++done;
    Hom c = transpose_curry<SNetCat>(f);
    CHECK(c.src == a);
    Hom back = transpose_uncurry<SNetCat>(c);
    CHECK(back.src == f.src);
    CHECK(back.tgt == f.tgt);
    CHECK(back.net == f.net);
    // Correctness is preserved and reflected.
    CHECK(is_correct(c.net) == is_correct(f.net));
  }
  CHECK(done == 200);
}

TEST_CASE("transposing exa1 matches the two-sided regrouping") {
  // Currying the grouped exa1 arrow peels the b&a block off the source side;
  // the linking is carried over link for link.
  Hom f = exa1_as_arrow();
  Hom c = transpose_curry<SNetCat>(f);
  CHECK(c.src == parse_formula("~a | ~b"));
  CHECK(c.tgt == parse_formula("((~b & a) | (~a & ~b)) | (~a & b)"));
  CHECK(c.net.links().size() == f.net.links().size());
  CHECK(is_correct(c.net));
}

TEST_CASE("functoriality of the tensors") {
  Sampler s(777, 2, 2);
  for (int i = 0; i < 100; ++i) {
    Hom f = s.hom();
    Hom g = s.hom();
    Hom h = s.hom_from(f.tgt);
    Hom k = s.hom_from(g.tgt);
    auto lhs = hom_compose<SNetCat>(
        Hom{Formula::conj(h.src, k.src), Formula::conj(h.tgt, k.tgt),
            juxtapose_and(h.net, k.net)},
        Hom{Formula::conj(f.src, g.src), Formula::conj(f.tgt, g.tgt),
            juxtapose_and(f.net, g.net)});
    auto rhs_f = hom_compose<SNetCat>(h, f);
    auto rhs_g = hom_compose<SNetCat>(k, g);
    CHECK(lhs.net == juxtapose_and(rhs_f.net, rhs_g.net));
  }
}

TEST_CASE("elaborate composes structurally") {
  Formula a = F("a");
  MExpr e = MExpr::compose(MExpr::gen(Gen::Id, {a}), MExpr::gen(Gen::Id, {a}));
  CHECK(elab(e).net == generator_net(Gen::Id, {a}));

  // id_a + id_a = id_a in the simple-net category.
  MExpr sum_expr = plus_of(MExpr::gen(Gen::Id, {a}), MExpr::gen(Gen::Id, {a}));
  CHECK(elab(sum_expr).net == generator_net(Gen::Id, {a}));
}

TEST_CASE("type errors in expressions") {
  MExpr bad = MExpr::compose(MExpr::gen(Gen::Id, {F("a")}), MExpr::gen(Gen::Id, {F("b")}));
  CHECK_THROWS_AS(type_of(bad), TypeError);
  CHECK_THROWS_AS(elaborate<SNetCat>(bad), TypeError);
  CHECK_THROWS_AS(type_of(MExpr::curry(MExpr::gen(Gen::Id, {F("a | b")}))), TypeError);
  CHECK_THROWS_AS(elaborate<SNetCat>(MExpr::curry(MExpr::gen(Gen::Id, {F("a | b")}))),
                  TypeError);
}

TEST_CASE("reshape builds coherence isos") {
  Formula from = F("(a & b) & (c & d)");
  Formula to = F("d & ((b & a) & c)");
  MExpr e = and_reshape(from, to);
  MType t = type_of(e);
  CHECK(t.src == from);
  CHECK(t.tgt == to);
  Hom h = elab(e);
  CHECK(is_correct(h.net));

  Formula ofrom = F("(a | (b & c)) | (t | f)");
  Formula oto = F("t | ((b & c) | (f | a))");
  MExpr oe = or_reshape(ofrom, oto);
  MType ot = type_of(oe);
  CHECK(ot.src == ofrom);
  CHECK(ot.tgt == oto);

  CHECK_THROWS(or_reshape(F("a | b"), F("a | c")));
}

TEST_CASE("dual builds the contravariant image") {
  Sampler s(31415, 2, 2);
  for (int i = 0; i < 50; ++i) {
    Hom f = s.hom();
    MExpr v = MExpr::var("f", f.src, f.tgt);
    MExpr d = dual_of(v);
    MType t = type_of(d);
    CHECK(t.src == negate(f.tgt));
    CHECK(t.tgt == negate(f.src));
    VarBinding<SNetCat> vars{{"f", f}};
    Hom df = elaborate<SNetCat>(d, vars);
    // Dualizing twice gives back the original net.
    MExpr dd = dual_of(MExpr::var("g", df.src, df.tgt));
    VarBinding<SNetCat> vars2{{"g", df}};
    Hom ddf = elaborate<SNetCat>(dd, vars2);
    CHECK(ddf.src == f.src);
    CHECK(ddf.tgt == f.tgt);
    CHECK(ddf.net == f.net);
  }
}

TEST_CASE("e1, e2, proj_f, coproj_t collapse to one net") {
  Hom e1 = elab(MExpr::gen(Gen::E1, {}));
  Hom e2 = elab(MExpr::gen(Gen::E2, {}));
  Hom pf = elab(MExpr::gen(Gen::Proj, {Formula::bot()}));
  Hom ct = elab(MExpr::gen(Gen::Coproj, {Formula::top()}));
  CHECK(e1.net == e2.net);
  CHECK(e1.net == pf.net);
  CHECK(e1.net == ct.net);
}
