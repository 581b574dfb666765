#include "boolcat/morphism.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace boolcat {

namespace {

struct GenInfo {
  Gen g;
  const char* name;
  int arity;
  bool derived;
};

constexpr std::array<GenInfo, 41> kGenInfo{{
    {Gen::Id, "id", 1, false},
    {Gen::Assoc, "assoc", 3, false},
    {Gen::AssocInv, "assoc-inv", 3, false},
    {Gen::Twist, "twist", 2, false},
    {Gen::Runit, "runit", 1, false},
    {Gen::RunitInv, "runit-inv", 1, false},
    {Gen::Lunit, "lunit", 1, false},
    {Gen::LunitInv, "lunit-inv", 1, false},
    {Gen::Coassoc, "coassoc", 3, false},
    {Gen::CoassocInv, "coassoc-inv", 3, false},
    {Gen::Cotwist, "cotwist", 2, false},
    {Gen::Corunit, "corunit", 1, false},
    {Gen::CorunitInv, "corunit-inv", 1, false},
    {Gen::Colunit, "colunit", 1, false},
    {Gen::ColunitInv, "colunit-inv", 1, false},
    {Gen::SwitchS, "switch", 3, false},
    {Gen::SwitchL, "switch-l", 3, false},
    {Gen::SwitchM, "switch-m", 3, false},
    {Gen::SwitchR, "switch-r", 3, false},
    {Gen::Medial, "medial", 4, false},
    {Gen::NullaryMedial, "nm", 0, false},
    {Gen::NullaryComedial, "nmhat", 0, false},
    {Gen::Diag, "diag", 1, false},
    {Gen::Codiag, "codiag", 1, false},
    {Gen::Proj, "proj", 1, false},
    {Gen::Coproj, "coproj", 1, false},
    {Gen::Nid, "nid", 1, false},
    {Gen::Conid, "conid", 1, false},
    {Gen::ProjL, "projl", 2, true},
    {Gen::ProjR, "projr", 2, true},
    {Gen::CoprojL, "coprojl", 2, true},
    {Gen::CoprojR, "coprojr", 2, true},
    {Gen::Mix, "mix", 2, true},
    {Gen::E1, "e1", 0, true},
    {Gen::E2, "e2", 0, true},
    {Gen::TensorMap, "tens", 4, true},
    {Gen::CotensorMap, "cotens", 4, true},
    {Gen::Medial3, "medial3", 6, true},
    {Gen::Comedial3, "comedial3", 6, true},
    {Gen::Diag3, "diag3", 1, true},
    {Gen::Codiag3, "codiag3", 1, true},
}};

const GenInfo& info(Gen g) {
  for (const auto& gi : kGenInfo)
    if (gi.g == g) return gi;
  throw BoolcatError("unknown generator");
}

Formula And(Formula a, Formula b) { return Formula::conj(std::move(a), std::move(b)); }
Formula Or(Formula a, Formula b) { return Formula::disj(std::move(a), std::move(b)); }

}  // namespace

int gen_arity(Gen g) { return info(g).arity; }
const char* gen_name(Gen g) { return info(g).name; }
bool gen_is_derived(Gen g) { return info(g).derived; }

const Gen* gen_by_name(const std::string& name) {
  for (const auto& gi : kGenInfo)
    if (name == gi.name) return &gi.g;
  return nullptr;
}

MExpr MExpr::gen(::boolcat::Gen g, std::vector<Formula> params) {
  if (static_cast<int>(params.size()) != gen_arity(g))
    throw BoolcatError(std::string("generator ") + gen_name(g) + " expects " +
                       std::to_string(gen_arity(g)) + " object parameters, got " +
                       std::to_string(params.size()));
  auto n = std::make_shared<MExprNode>();
  n->tag = Tag::Gen;
  n->g = g;
  n->params = std::move(params);
  return MExpr(std::move(n));
}

MExpr MExpr::compose(MExpr later, MExpr earlier) {
  auto n = std::make_shared<MExprNode>();
  n->tag = Tag::Compose;
  n->a = std::move(later);
  n->b = std::move(earlier);
  return MExpr(std::move(n));
}

MExpr MExpr::tens_and(MExpr l, MExpr r) {
  auto n = std::make_shared<MExprNode>();
  n->tag = Tag::TensAnd;
  n->a = std::move(l);
  n->b = std::move(r);
  return MExpr(std::move(n));
}

MExpr MExpr::tens_or(MExpr l, MExpr r) {
  auto n = std::make_shared<MExprNode>();
  n->tag = Tag::TensOr;
  n->a = std::move(l);
  n->b = std::move(r);
  return MExpr(std::move(n));
}

MExpr MExpr::curry(MExpr inner) {
  auto n = std::make_shared<MExprNode>();
  n->tag = Tag::Curry;
  n->a = std::move(inner);
  return MExpr(std::move(n));
}

MExpr MExpr::uncurry(MExpr inner) {
  auto n = std::make_shared<MExprNode>();
  n->tag = Tag::Uncurry;
  n->a = std::move(inner);
  return MExpr(std::move(n));
}

MExpr MExpr::var(std::string name, Formula src, Formula tgt) {
  auto n = std::make_shared<MExprNode>();
  n->tag = Tag::Var;
  n->name = std::move(name);
  n->vsrc = std::move(src);
  n->vtgt = std::move(tgt);
  return MExpr(std::move(n));
}

MType gen_type(Gen g, const std::vector<Formula>& P) {
  switch (g) {
    case Gen::Id:
      return {P[0], P[0]};
    case Gen::Assoc:
      return {And(P[0], And(P[1], P[2])), And(And(P[0], P[1]), P[2])};
    case Gen::AssocInv:
      return {And(And(P[0], P[1]), P[2]), And(P[0], And(P[1], P[2]))};
    case Gen::Twist:
      return {And(P[0], P[1]), And(P[1], P[0])};
    case Gen::Runit:
      return {And(P[0], Formula::top()), P[0]};
    case Gen::RunitInv:
      return {P[0], And(P[0], Formula::top())};
    case Gen::Lunit:
      return {And(Formula::top(), P[0]), P[0]};
    case Gen::LunitInv:
      return {P[0], And(Formula::top(), P[0])};
    case Gen::Coassoc:
      return {Or(P[0], Or(P[1], P[2])), Or(Or(P[0], P[1]), P[2])};
    case Gen::CoassocInv:
      return {Or(Or(P[0], P[1]), P[2]), Or(P[0], Or(P[1], P[2]))};
    case Gen::Cotwist:
      return {Or(P[0], P[1]), Or(P[1], P[0])};
    case Gen::Corunit:
      return {Or(P[0], Formula::bot()), P[0]};
    case Gen::CorunitInv:
      return {P[0], Or(P[0], Formula::bot())};
    case Gen::Colunit:
      return {Or(Formula::bot(), P[0]), P[0]};
    case Gen::ColunitInv:
      return {P[0], Or(Formula::bot(), P[0])};
    case Gen::SwitchS:
      return {And(Or(P[0], P[1]), P[2]), Or(P[0], And(P[1], P[2]))};
    case Gen::SwitchL:
      return {And(P[0], Or(P[1], P[2])), Or(And(P[0], P[1]), P[2])};
    case Gen::SwitchM:
      return {And(P[0], Or(P[1], P[2])), Or(P[1], And(P[0], P[2]))};
    case Gen::SwitchR:
      return {And(Or(P[0], P[1]), P[2]), Or(And(P[0], P[2]), P[1])};
    case Gen::Medial:
      return {Or(And(P[0], P[1]), And(P[2], P[3])), And(Or(P[0], P[2]), Or(P[1], P[3]))};
    case Gen::NullaryMedial:
      return {Or(Formula::top(), Formula::top()), Formula::top()};
    case Gen::NullaryComedial:
      return {Formula::bot(), And(Formula::bot(), Formula::bot())};
    case Gen::Diag:
      return {P[0], And(P[0], P[0])};
    case Gen::Codiag:
      return {Or(P[0], P[0]), P[0]};
    case Gen::Proj:
      return {P[0], Formula::top()};
    case Gen::Coproj:
      return {Formula::bot(), P[0]};
    case Gen::Nid:
      return {Formula::top(), Or(negate(P[0]), P[0])};
    case Gen::Conid:
      return {And(P[0], negate(P[0])), Formula::bot()};
    case Gen::ProjL:
      return {And(P[0], P[1]), P[0]};
    case Gen::ProjR:
      return {And(P[0], P[1]), P[1]};
    case Gen::CoprojL:
      return {P[0], Or(P[0], P[1])};
    case Gen::CoprojR:
      return {P[1], Or(P[0], P[1])};
    case Gen::Mix:
      return {And(P[0], P[1]), Or(P[0], P[1])};
    case Gen::E1:
    case Gen::E2:
      return {Formula::bot(), Formula::top()};
    case Gen::TensorMap:
      return {And(Or(P[0], P[1]), Or(P[2], P[3])), Or(Or(P[0], And(P[1], P[2])), P[3])};
    case Gen::CotensorMap:
      return {And(And(P[0], Or(P[1], P[2])), P[3]), Or(And(P[0], P[1]), And(P[2], P[3]))};
    case Gen::Medial3:
      return {Or(And(And(P[0], P[1]), P[2]), And(And(P[3], P[4]), P[5])),
              And(And(Or(P[0], P[3]), Or(P[1], P[4])), Or(P[2], P[5]))};
    case Gen::Comedial3:
      return {Or(Or(And(P[0], P[1]), And(P[2], P[3])), And(P[4], P[5])),
              And(Or(Or(P[0], P[2]), P[4]), Or(Or(P[1], P[3]), P[5]))};
    case Gen::Diag3:
      return {P[0], And(And(P[0], P[0]), P[0])};
    case Gen::Codiag3:
      return {Or(Or(P[0], P[0]), P[0]), P[0]};
  }
  throw BoolcatError("unreachable generator kind");
}

MType type_of(const MExpr& e) {
  switch (e.tag()) {
    case MExpr::Tag::Gen:
      return gen_type(e.gen_kind(), e.params());
    case MExpr::Tag::Compose: {
      MType later = type_of(e.first());
      MType earlier = type_of(e.second());
      if (earlier.tgt != later.src)
        throw TypeError("composition mismatch", earlier.tgt, later.src);
      return {earlier.src, later.tgt};
    }
    case MExpr::Tag::TensAnd: {
      MType l = type_of(e.first());
      MType r = type_of(e.second());
      return {And(l.src, r.src), And(l.tgt, r.tgt)};
    }
    case MExpr::Tag::TensOr: {
      MType l = type_of(e.first());
      MType r = type_of(e.second());
      return {Or(l.src, r.src), Or(l.tgt, r.tgt)};
    }
    case MExpr::Tag::Curry: {
      MType t = type_of(e.first());
      if (t.src.kind() != Formula::Kind::And)
        throw TypeError("curry needs a conjunctive source", t.src, t.src);
      return {t.src.left(), Or(negate(t.src.right()), t.tgt)};
    }
    case MExpr::Tag::Uncurry: {
      MType t = type_of(e.first());
      if (t.tgt.kind() != Formula::Kind::Or)
        throw TypeError("uncurry needs a disjunctive target", t.tgt, t.tgt);
      return {And(t.src, negate(t.tgt.left())), t.tgt.right()};
    }
    case MExpr::Tag::Var:
      return {e.var_src(), e.var_tgt()};
  }
  throw BoolcatError("unreachable expression tag");
}

namespace {

MExpr g1(Gen g, Formula a) { return MExpr::gen(g, {std::move(a)}); }
MExpr g2(Gen g, Formula a, Formula b) { return MExpr::gen(g, {std::move(a), std::move(b)}); }
MExpr g3(Gen g, Formula a, Formula b, Formula c) {
  return MExpr::gen(g, {std::move(a), std::move(b), std::move(c)});
}
MExpr g4(Gen g, Formula a, Formula b, Formula c, Formula d) {
  return MExpr::gen(g, {std::move(a), std::move(b), std::move(c), std::move(d)});
}
MExpr eid(Formula a) { return g1(Gen::Id, std::move(a)); }

}  // namespace

MExpr comp(std::vector<MExpr> chain) {
  if (chain.empty()) throw BoolcatError("empty composition");
  MExpr e = chain.back();
  for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it)
    e = MExpr::compose(*it, e);
  return e;
}

MExpr expand_derived(Gen g, const std::vector<Formula>& P) {
  Formula T = Formula::top();
  Formula F = Formula::bot();
  switch (g) {
    case Gen::ProjL:
      return comp({g1(Gen::Runit, P[0]), MExpr::tens_and(eid(P[0]), g1(Gen::Proj, P[1]))});
    case Gen::ProjR:
      return comp({g1(Gen::Lunit, P[1]), MExpr::tens_and(g1(Gen::Proj, P[0]), eid(P[1]))});
    case Gen::CoprojL:
      return comp({MExpr::tens_or(eid(P[0]), g1(Gen::Coproj, P[1])), g1(Gen::CorunitInv, P[0])});
    case Gen::CoprojR:
      return comp({MExpr::tens_or(g1(Gen::Coproj, P[0]), eid(P[1])), g1(Gen::ColunitInv, P[1])});
    case Gen::Mix:
      return comp({MExpr::tens_or(g1(Gen::Runit, P[0]), eid(P[1])),
                   MExpr::tens_or(MExpr::tens_and(eid(P[0]), g1(Gen::Proj, F)), eid(P[1])),
                   g3(Gen::SwitchL, P[0], F, P[1]),
                   MExpr::tens_and(eid(P[0]), g1(Gen::ColunitInv, P[1]))});
    case Gen::E1:
      return comp({g1(Gen::Runit, T),
                   MExpr::tens_and(g1(Gen::Colunit, T), g1(Gen::Corunit, T)),
                   g4(Gen::Medial, F, T, T, F),
                   MExpr::tens_or(g1(Gen::RunitInv, F), g1(Gen::LunitInv, F)),
                   g1(Gen::ColunitInv, F)});
    case Gen::E2:
      return comp({g1(Gen::Runit, T),
                   MExpr::tens_and(g1(Gen::Corunit, T), g1(Gen::Colunit, T)),
                   g4(Gen::Medial, T, F, F, T),
                   MExpr::tens_or(g1(Gen::LunitInv, F), g1(Gen::RunitInv, F)),
                   g1(Gen::ColunitInv, F)});
    case Gen::TensorMap:
      return comp({MExpr::tens_or(g3(Gen::SwitchS, P[0], P[1], P[2]), eid(P[3])),
                   g3(Gen::SwitchL, Or(P[0], P[1]), P[2], P[3])});
    case Gen::CotensorMap:
      return comp({g3(Gen::SwitchS, And(P[0], P[1]), P[2], P[3]),
                   MExpr::tens_and(g3(Gen::SwitchL, P[0], P[1], P[2]), eid(P[3]))});
    case Gen::Medial3:
      return comp({MExpr::tens_and(g4(Gen::Medial, P[0], P[1], P[3], P[4]),
                                   eid(Or(P[2], P[5]))),
                   g4(Gen::Medial, And(P[0], P[1]), P[2], And(P[3], P[4]), P[5])});
    case Gen::Comedial3:
      return comp({g4(Gen::Medial, Or(P[0], P[2]), Or(P[1], P[3]), P[4], P[5]),
                   MExpr::tens_or(g4(Gen::Medial, P[0], P[1], P[2], P[3]),
                                  eid(And(P[4], P[5])))});
    case Gen::Diag3:
      return comp({MExpr::tens_and(g1(Gen::Diag, P[0]), eid(P[0])), g1(Gen::Diag, P[0])});
    case Gen::Codiag3:
      return comp({g1(Gen::Codiag, P[0]), MExpr::tens_or(g1(Gen::Codiag, P[0]), eid(P[0]))});
    default:
      throw BoolcatError(std::string("generator ") + gen_name(g) + " is primitive");
  }
}

MExpr dual_of(const MExpr& e) {
  MType t = type_of(e);
  Formula nsrc = negate(t.src);
  Formula ntgt = negate(t.tgt);
  return comp({g1(Gen::Corunit, nsrc),
               MExpr::curry(comp({g1(Gen::Conid, t.tgt), MExpr::tens_and(e, eid(ntgt)),
                                  g2(Gen::Twist, ntgt, t.src)}))});
}

MExpr plus_of(const MExpr& f, const MExpr& g) {
  MType tf = type_of(f);
  MType tg = type_of(g);
  if (tf.src != tg.src) throw TypeError("sum source mismatch", tf.src, tg.src);
  if (tf.tgt != tg.tgt) throw TypeError("sum target mismatch", tf.tgt, tg.tgt);
  return comp({g1(Gen::Codiag, tf.tgt), g2(Gen::Mix, tf.tgt, tf.tgt), MExpr::tens_and(f, g),
               g1(Gen::Diag, tf.src)});
}

MExpr mid4_and(Formula a, Formula b, Formula c, Formula d) {
  return comp({g3(Gen::Assoc, a, c, And(b, d)),
               MExpr::tens_and(eid(a), g3(Gen::AssocInv, c, b, d)),
               MExpr::tens_and(eid(a), MExpr::tens_and(g2(Gen::Twist, b, c), eid(d))),
               MExpr::tens_and(eid(a), g3(Gen::Assoc, b, c, d)),
               g3(Gen::AssocInv, a, b, And(c, d))});
}

MExpr mid4_or(Formula a, Formula b, Formula c, Formula d) {
  return comp({g3(Gen::Coassoc, a, c, Or(b, d)),
               MExpr::tens_or(eid(a), g3(Gen::CoassocInv, c, b, d)),
               MExpr::tens_or(eid(a), MExpr::tens_or(g2(Gen::Cotwist, b, c), eid(d))),
               MExpr::tens_or(eid(a), g3(Gen::Coassoc, b, c, d)),
               g3(Gen::CoassocInv, a, b, Or(c, d))});
}

namespace {

// Machinery for and_reshape / or_reshape. Works uniformly over both tensors
// through a small trait bundle.
struct AndOps {
  static constexpr Formula::Kind kind = Formula::Kind::And;
  static Formula join(Formula a, Formula b) { return Formula::conj(std::move(a), std::move(b)); }
  static MExpr tens(MExpr a, MExpr b) { return MExpr::tens_and(std::move(a), std::move(b)); }
  static MExpr assoc(Formula a, Formula b, Formula c) { return g3(Gen::Assoc, a, b, c); }
  static MExpr assoc_inv(Formula a, Formula b, Formula c) { return g3(Gen::AssocInv, a, b, c); }
  static MExpr twist(Formula a, Formula b) { return g2(Gen::Twist, a, b); }
};

struct OrOps {
  static constexpr Formula::Kind kind = Formula::Kind::Or;
  static Formula join(Formula a, Formula b) { return Formula::disj(std::move(a), std::move(b)); }
  static MExpr tens(MExpr a, MExpr b) { return MExpr::tens_or(std::move(a), std::move(b)); }
  static MExpr assoc(Formula a, Formula b, Formula c) { return g3(Gen::Coassoc, a, b, c); }
  static MExpr assoc_inv(Formula a, Formula b, Formula c) { return g3(Gen::CoassocInv, a, b, c); }
  static MExpr twist(Formula a, Formula b) { return g2(Gen::Cotwist, a, b); }
};

template <typename Ops>
void blocks_of(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == Ops::kind) {
    blocks_of<Ops>(f.left(), out);
    blocks_of<Ops>(f.right(), out);
  } else {
    out.push_back(f);
  }
}

template <typename Ops>
Formula right_assoc(const std::vector<Formula>& blocks, std::size_t from) {
  Formula acc = blocks.back();
  for (std::size_t i = blocks.size() - 1; i > from; --i)
    acc = Ops::join(blocks[i - 1], std::move(acc));
  return acc;
}

// Inverse of an expression built only from coherence isos, identity, the two
// tensors, and composition.
MExpr invert_coherence(const MExpr& e) {
  switch (e.tag()) {
    case MExpr::Tag::Gen: {
      const auto& P = e.params();
      switch (e.gen_kind()) {
        case Gen::Id:
          return e;
        case Gen::Assoc:
          return MExpr::gen(Gen::AssocInv, P);
        case Gen::AssocInv:
          return MExpr::gen(Gen::Assoc, P);
        case Gen::Coassoc:
          return MExpr::gen(Gen::CoassocInv, P);
        case Gen::CoassocInv:
          return MExpr::gen(Gen::Coassoc, P);
        case Gen::Twist:
          return g2(Gen::Twist, P[1], P[0]);
        case Gen::Cotwist:
          return g2(Gen::Cotwist, P[1], P[0]);
        default:
          throw BoolcatError("invert_coherence: not a coherence generator");
      }
    }
    case MExpr::Tag::Compose:
      return MExpr::compose(invert_coherence(e.second()), invert_coherence(e.first()));
    case MExpr::Tag::TensAnd:
      return MExpr::tens_and(invert_coherence(e.first()), invert_coherence(e.second()));
    case MExpr::Tag::TensOr:
      return MExpr::tens_or(invert_coherence(e.first()), invert_coherence(e.second()));
    default:
      throw BoolcatError("invert_coherence: unsupported expression");
  }
}

// Steps (earliest first) that fully right-associate f's block spine.
template <typename Ops>
void right_assoc_fwd(const Formula& f, std::vector<MExpr>& steps) {
  if (f.kind() != Ops::kind) return;
  const Formula& l = f.left();
  const Formula& r = f.right();
  {
    std::vector<MExpr> rsteps;
    right_assoc_fwd<Ops>(r, rsteps);
    for (const MExpr& s : rsteps) steps.push_back(Ops::tens(eid(l), s));
  }
  std::vector<Formula> rblocks;
  blocks_of<Ops>(r, rblocks);
  Formula rspine = right_assoc<Ops>(rblocks, 0);
  {
    std::vector<MExpr> lsteps;
    right_assoc_fwd<Ops>(l, lsteps);
    for (const MExpr& s : lsteps) steps.push_back(Ops::tens(s, eid(rspine)));
  }
  // Rotate (x0 . (x1 . ...)) . rspine fully to the right.
  std::vector<Formula> lblocks;
  blocks_of<Ops>(l, lblocks);
  std::vector<Formula> prefix;
  for (std::size_t k = 0; k + 1 < lblocks.size(); ++k) {
    Formula tail = right_assoc<Ops>(lblocks, k + 1);
    MExpr step = Ops::assoc_inv(lblocks[k], tail, rspine);
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
      step = Ops::tens(eid(*it), std::move(step));
    steps.push_back(std::move(step));
    prefix.push_back(lblocks[k]);
  }
}

// Swap blocks p and p+1 on a fully right-associated spine.
template <typename Ops>
MExpr spine_swap(const std::vector<Formula>& blocks, std::size_t p) {
  MExpr step;
  if (p + 2 == blocks.size()) {
    step = Ops::twist(blocks[p], blocks[p + 1]);
  } else {
    Formula tail = right_assoc<Ops>(blocks, p + 2);
    step = comp({Ops::assoc_inv(blocks[p + 1], blocks[p], tail),
                 Ops::tens(Ops::twist(blocks[p], blocks[p + 1]), eid(tail)),
                 Ops::assoc(blocks[p], blocks[p + 1], tail)});
  }
  for (std::size_t i = p; i > 0; --i) step = Ops::tens(eid(blocks[i - 1]), std::move(step));
  return step;
}

template <typename Ops>
MExpr reshape(const Formula& from, const Formula& to) {
  if (from == to) return eid(from);
  std::vector<Formula> src_blocks, dst_blocks;
  blocks_of<Ops>(from, src_blocks);
  blocks_of<Ops>(to, dst_blocks);
  if (src_blocks.size() != dst_blocks.size())
    throw BoolcatError("reshape: block counts differ: " + to_string(from) + " vs " +
                       to_string(to));
  std::vector<MExpr> steps;  // earliest first
  right_assoc_fwd<Ops>(from, steps);
  // Selection sort on the spine toward the destination block order.
  std::vector<Formula> cur = src_blocks;
  for (std::size_t i = 0; i < dst_blocks.size(); ++i) {
    std::size_t j = i;
    while (j < cur.size() && cur[j] != dst_blocks[i]) ++j;
    if (j >= cur.size())
      throw BoolcatError("reshape: block multisets differ: " + to_string(from) + " vs " +
                         to_string(to));
    for (; j > i; --j) {
      steps.push_back(spine_swap<Ops>(cur, j - 1));
      std::swap(cur[j - 1], cur[j]);
    }
  }
  // Un-associate into the destination shape.
  std::vector<MExpr> to_fwd;
  right_assoc_fwd<Ops>(to, to_fwd);
  for (auto it = to_fwd.rbegin(); it != to_fwd.rend(); ++it)
    steps.push_back(invert_coherence(*it));
  if (steps.empty()) return eid(from);
  std::vector<MExpr> chain(steps.rbegin(), steps.rend());
  return comp(std::move(chain));
}

}  // namespace

MExpr and_reshape(const Formula& from, const Formula& to) { return reshape<AndOps>(from, to); }
MExpr or_reshape(const Formula& from, const Formula& to) { return reshape<OrOps>(from, to); }

Formula substitute_atoms(const Formula& f, const std::map<std::string, Formula>& subst) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = subst.find(f.atom_name());
      return it == subst.end() ? f : it->second;
    }
    case Formula::Kind::NegAtom: {
      auto it = subst.find(f.atom_name());
      return it == subst.end() ? f : negate(it->second);
    }
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return f;
    case Formula::Kind::And:
      return Formula::conj(substitute_atoms(f.left(), subst),
                           substitute_atoms(f.right(), subst));
    case Formula::Kind::Or:
      return Formula::disj(substitute_atoms(f.left(), subst),
                           substitute_atoms(f.right(), subst));
  }
  throw BoolcatError("unreachable");
}

MExpr substitute_atoms(const MExpr& e, const std::map<std::string, Formula>& subst) {
  switch (e.tag()) {
    case MExpr::Tag::Gen: {
      std::vector<Formula> params;
      params.reserve(e.params().size());
      for (const Formula& p : e.params()) params.push_back(substitute_atoms(p, subst));
      return MExpr::gen(e.gen_kind(), std::move(params));
    }
    case MExpr::Tag::Compose:
      return MExpr::compose(substitute_atoms(e.first(), subst),
                            substitute_atoms(e.second(), subst));
    case MExpr::Tag::TensAnd:
      return MExpr::tens_and(substitute_atoms(e.first(), subst),
                             substitute_atoms(e.second(), subst));
    case MExpr::Tag::TensOr:
      return MExpr::tens_or(substitute_atoms(e.first(), subst),
                            substitute_atoms(e.second(), subst));
    case MExpr::Tag::Curry:
      return MExpr::curry(substitute_atoms(e.first(), subst));
    case MExpr::Tag::Uncurry:
      return MExpr::uncurry(substitute_atoms(e.first(), subst));
    case MExpr::Tag::Var:
      return MExpr::var(e.var_name(), substitute_atoms(e.var_src(), subst),
                        substitute_atoms(e.var_tgt(), subst));
  }
  throw BoolcatError("unreachable");
}

std::string to_string(const MExpr& e) {
  switch (e.tag()) {
    case MExpr::Tag::Gen: {
      std::string out = "(";
      out += gen_name(e.gen_kind());
      for (const Formula& p : e.params()) out += " {" + to_string(p) + "}";
      return out + ")";
    }
    case MExpr::Tag::Compose:
      return "(comp " + to_string(e.first()) + " " + to_string(e.second()) + ")";
    case MExpr::Tag::TensAnd:
      return "(and " + to_string(e.first()) + " " + to_string(e.second()) + ")";
    case MExpr::Tag::TensOr:
      return "(or " + to_string(e.first()) + " " + to_string(e.second()) + ")";
    case MExpr::Tag::Curry:
      return "(curry " + to_string(e.first()) + ")";
    case MExpr::Tag::Uncurry:
      return "(uncurry " + to_string(e.first()) + ")";
    case MExpr::Tag::Var:
      return "$" + e.var_name();
  }
  return "?";
}

namespace {

// One identity bundle: the occurrence of ~X rooted at `neg`, the occurrence
// of X rooted at `pos`. Links follow leaf polarity: downward on atoms,
// upward on negated atoms, self-loops on t.
struct Bundle {
  LeafRef neg, pos;
  Formula x;
};

void add_bundle_links(const LeafTable& table, const Bundle& b,
                      std::vector<std::pair<int, int>>& links) {
  struct Item {
    const Formula* f;
    std::string path;
  };
  std::vector<Item> stack{{&b.x, ""}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    if (!it.f->is_leaf()) {
      stack.push_back({&it.f->left(), it.path + 'L'});
      stack.push_back({&it.f->right(), it.path + 'R'});
      continue;
    }
    int pos_leaf = table.id_of(LeafRef{b.pos.formula, b.pos.path + it.path});
    int neg_leaf = table.id_of(LeafRef{b.neg.formula, b.neg.path + mirror_path(it.path)});
    switch (it.f->kind()) {
      case Formula::Kind::Atom:
        links.emplace_back(neg_leaf, pos_leaf);
        break;
      case Formula::Kind::NegAtom:
        links.emplace_back(pos_leaf, neg_leaf);
        break;
      case Formula::Kind::Top:
        links.emplace_back(pos_leaf, pos_leaf);
        break;
      case Formula::Kind::Bot:
        break;  // the mirrored t self-link is added by the final sweep
      default:
        break;
    }
  }
}

SimpleNet bundle_net(const Formula& src, const Formula& tgt, const std::vector<Bundle>& bundles) {
  Sequent seq({negate(src), tgt});
  LeafTable table(seq);
  std::vector<std::pair<int, int>> links;
  for (const Bundle& b : bundles) add_bundle_links(table, b, links);
  // Every t leaf carries a self-link; bundles may already have added some.
  for (int i = 0; i < table.size(); ++i)
    if (table.label(i).kind() == Formula::Kind::Top) links.emplace_back(i, i);
  return SimpleNet(SimpleNet::Unchecked{}, std::move(seq), std::move(links));
}

}  // namespace

SimpleNet generator_net(Gen g, const std::vector<Formula>& P) {
  if (gen_is_derived(g))
    throw BoolcatError(std::string("generator ") + gen_name(g) + " elaborates via expansion");
  MType t = gen_type(g, P);
  // (src_path, tgt_path) per parameter occurrence; the occurrence of ~X in
  // the one-sided sequent sits at the mirror of the source path.
  auto via = [&](std::initializer_list<std::tuple<const char*, const char*, int>> occ) {
    std::vector<Bundle> bs;
    for (auto [sp, tp, i] : occ)
      bs.push_back(Bundle{LeafRef{0, mirror_path(sp)}, LeafRef{1, tp}, P[i]});
    return bundle_net(t.src, t.tgt, bs);
  };
  switch (g) {
    case Gen::Id:
      return via({{"", "", 0}});
    case Gen::Assoc:
    case Gen::Coassoc:
      return via({{"L", "LL", 0}, {"RL", "LR", 1}, {"RR", "R", 2}});
    case Gen::AssocInv:
    case Gen::CoassocInv:
      return via({{"LL", "L", 0}, {"LR", "RL", 1}, {"R", "RR", 2}});
    case Gen::Twist:
    case Gen::Cotwist:
      return via({{"L", "R", 0}, {"R", "L", 1}});
    case Gen::Runit:
    case Gen::Corunit:
      return via({{"L", "", 0}});
    case Gen::RunitInv:
    case Gen::CorunitInv:
      return via({{"", "L", 0}});
    case Gen::Lunit:
    case Gen::Colunit:
      return via({{"R", "", 0}});
    case Gen::LunitInv:
    case Gen::ColunitInv:
      return via({{"", "R", 0}});
    case Gen::SwitchS:
      return via({{"LL", "L", 0}, {"LR", "RL", 1}, {"R", "RR", 2}});
    case Gen::SwitchL:
      return via({{"L", "LL", 0}, {"RL", "LR", 1}, {"RR", "R", 2}});
    case Gen::SwitchM:
      return via({{"L", "RL", 0}, {"RL", "L", 1}, {"RR", "RR", 2}});
    case Gen::SwitchR:
      return via({{"LL", "LL", 0}, {"LR", "R", 1}, {"R", "LR", 2}});
    case Gen::Medial:
      return via({{"LL", "LL", 0}, {"LR", "RL", 1}, {"RL", "LR", 2}, {"RR", "RR", 3}});
    case Gen::NullaryMedial:
    case Gen::NullaryComedial:
    case Gen::Proj:
    case Gen::Coproj:
      return via({});
    case Gen::Diag:
      return via({{"", "L", 0}, {"", "R", 0}});
    case Gen::Codiag:
      return via({{"L", "", 0}, {"R", "", 0}});
    case Gen::Nid:
      return bundle_net(t.src, t.tgt, {Bundle{LeafRef{1, "L"}, LeafRef{1, "R"}, P[0]}});
    case Gen::Conid:
      return bundle_net(t.src, t.tgt, {Bundle{LeafRef{0, "R"}, LeafRef{0, "L"}, P[0]}});
    default:
      throw BoolcatError("unreachable");
  }
}

SimpleNet compose_simple(const SimpleNet& g, const SimpleNet& f) {
  if (f.sequent().size() != 2 || g.sequent().size() != 2)
    throw BoolcatError("compose: both nets must have exactly two formulas");
  const Formula& cut = f.sequent()[1];
  if (g.sequent()[0] != negate(cut))
    throw BoolcatError("compose: type mismatch at the cut (" + to_string(cut) + " vs " +
                       to_string(negate(g.sequent()[0])) + ")");

  Sequent seq({f.sequent()[0], g.sequent()[1]});
  LeafTable table(seq);

  // Merged node space: result leaves first, then one node per cut-leaf pair.
  const LeafTable& ft = f.table();
  const LeafTable& gt = g.table();
  int out_leaves = table.size();
  std::map<std::string, int> cut_index;  // path within the cut formula
  int next = out_leaves;
  for (int i = 0; i < ft.size(); ++i)
    if (ft.info(i).ref.formula == 1) cut_index[ft.info(i).ref.path] = next++;
  int total = next;

  std::vector<int> fmap(ft.size()), gmap(gt.size());
  for (int i = 0; i < ft.size(); ++i) {
    const LeafRef& r = ft.info(i).ref;
    fmap[i] = r.formula == 0 ? table.id_of(LeafRef{0, r.path}) : cut_index.at(r.path);
  }
  for (int i = 0; i < gt.size(); ++i) {
    const LeafRef& r = gt.info(i).ref;
    gmap[i] = r.formula == 0 ? cut_index.at(mirror_path(r.path)) : table.id_of(LeafRef{1, r.path});
  }

  std::vector<std::vector<int>> adj(total);
  for (auto [s, d] : f.links()) adj[fmap[s]].push_back(fmap[d]);
  for (auto [s, d] : g.links()) adj[gmap[s]].push_back(gmap[d]);

  // A result link is a path between result leaves whose interior nodes are
  // all cut nodes.
  std::vector<std::pair<int, int>> links;
  std::vector<bool> visited(total);
  for (int u = 0; u < out_leaves; ++u) {
    if (adj[u].empty()) continue;
    std::fill(visited.begin(), visited.end(), false);
    std::vector<int> stack(adj[u].begin(), adj[u].end());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (visited[v]) continue;
      visited[v] = true;
      if (v < out_leaves) {
        links.emplace_back(u, v);
        continue;
      }
      for (int w : adj[v]) stack.push_back(w);
    }
  }
  return SimpleNet(SimpleNet::Unchecked{}, std::move(seq), std::move(links));
}

SimpleNet SNetCat::relocate(const SimpleNet& n, Sequent s, const std::vector<LeafRef>& map) {
  LeafTable table(s);
  std::vector<int> node_map(n.table().size());
  for (int i = 0; i < n.table().size(); ++i) {
    node_map[i] = table.id_of(map[i]);
    if (node_map[i] < 0)
      throw BoolcatError("relocation target is not a leaf: " + to_string(map[i]));
  }
  std::vector<std::pair<int, int>> links;
  for (auto [a, b] : n.links()) links.emplace_back(node_map[a], node_map[b]);
  return SimpleNet(SimpleNet::Unchecked{}, std::move(s), std::move(links));
}

namespace {

// Leaf map for currying: (~B|~A, C) -> (~A, ~B|C).
std::vector<LeafRef> curry_map(const LeafTable& t) {
  std::vector<LeafRef> out(t.size());
  for (int i = 0; i < t.size(); ++i) {
    const LeafRef& r = t.info(i).ref;
    if (r.formula == 0) {
      if (r.path.empty() || (r.path[0] != 'L' && r.path[0] != 'R'))
        throw BoolcatError("curry: source formula is not a conjunction");
      out[i] = r.path[0] == 'L' ? LeafRef{1, "L" + r.path.substr(1)}
                                : LeafRef{0, r.path.substr(1)};
    } else {
      out[i] = LeafRef{1, "R" + r.path};
    }
  }
  return out;
}

// Leaf map for uncurrying: (~A, B|C) -> (B|~A, C).
std::vector<LeafRef> uncurry_map(const LeafTable& t) {
  std::vector<LeafRef> out(t.size());
  for (int i = 0; i < t.size(); ++i) {
    const LeafRef& r = t.info(i).ref;
    if (r.formula == 0) {
      out[i] = LeafRef{0, "R" + r.path};
    } else {
      if (r.path.empty() || (r.path[0] != 'L' && r.path[0] != 'R'))
        throw BoolcatError("uncurry: target formula is not a disjunction");
      out[i] = r.path[0] == 'L' ? LeafRef{0, "L" + r.path.substr(1)}
                                : LeafRef{1, r.path.substr(1)};
    }
  }
  return out;
}

}  // namespace

template <typename Cat>
HomT<typename Cat::Net> transpose_curry(const HomT<typename Cat::Net>& h) {
  if (h.src.kind() != Formula::Kind::And)
    throw TypeError("curry needs a conjunctive source", h.src, h.src);
  Formula a = h.src.left();
  Formula b = h.src.right();
  Formula tgt = Formula::disj(negate(b), h.tgt);
  Sequent seq({negate(a), tgt});
  auto map = curry_map(h.net.table());
  return {a, tgt, Cat::relocate(h.net, std::move(seq), map)};
}

template <typename Cat>
HomT<typename Cat::Net> transpose_uncurry(const HomT<typename Cat::Net>& h) {
  if (h.tgt.kind() != Formula::Kind::Or)
    throw TypeError("uncurry needs a disjunctive target", h.tgt, h.tgt);
  Formula b = h.tgt.left();
  Formula c = h.tgt.right();
  Formula src = Formula::conj(h.src, negate(b));
  Sequent seq({negate(src), c});
  auto map = uncurry_map(h.net.table());
  return {src, c, Cat::relocate(h.net, std::move(seq), map)};
}

template <typename Cat>
HomT<typename Cat::Net> hom_compose(const HomT<typename Cat::Net>& g,
                                    const HomT<typename Cat::Net>& f) {
  if (f.tgt != g.src) throw TypeError("composition mismatch", f.tgt, g.src);
  return {f.src, g.tgt, Cat::compose(g.net, f.net)};
}

template <typename Cat>
HomT<typename Cat::Net> elaborate(const MExpr& e, const VarBinding<Cat>& vars) {
  using Net = typename Cat::Net;
  switch (e.tag()) {
    case MExpr::Tag::Gen: {
      if (gen_is_derived(e.gen_kind()))
        return elaborate<Cat>(expand_derived(e.gen_kind(), e.params()), vars);
      MType t = gen_type(e.gen_kind(), e.params());
      return {t.src, t.tgt, Cat::lift(generator_net(e.gen_kind(), e.params()))};
    }
    case MExpr::Tag::Compose: {
      auto later = elaborate<Cat>(e.first(), vars);
      auto earlier = elaborate<Cat>(e.second(), vars);
      return hom_compose<Cat>(later, earlier);
    }
    case MExpr::Tag::TensAnd: {
      auto l = elaborate<Cat>(e.first(), vars);
      auto r = elaborate<Cat>(e.second(), vars);
      return {Formula::conj(l.src, r.src), Formula::conj(l.tgt, r.tgt),
              Cat::jux_and(l.net, r.net)};
    }
    case MExpr::Tag::TensOr: {
      auto l = elaborate<Cat>(e.first(), vars);
      auto r = elaborate<Cat>(e.second(), vars);
      return {Formula::disj(l.src, r.src), Formula::disj(l.tgt, r.tgt),
              Cat::jux_or(l.net, r.net)};
    }
    case MExpr::Tag::Curry:
      return transpose_curry<Cat>(elaborate<Cat>(e.first(), vars));
    case MExpr::Tag::Uncurry:
      return transpose_uncurry<Cat>(elaborate<Cat>(e.first(), vars));
    case MExpr::Tag::Var: {
      auto it = vars.find(e.var_name());
      if (it == vars.end()) throw BoolcatError("unbound morphism variable $" + e.var_name());
      const HomT<Net>& h = it->second;
      if (h.src != e.var_src()) throw TypeError("morphism variable source", h.src, e.var_src());
      if (h.tgt != e.var_tgt()) throw TypeError("morphism variable target", h.tgt, e.var_tgt());
      return h;
    }
  }
  throw BoolcatError("unreachable expression tag");
}

template HomT<SimpleNet> elaborate<SNetCat>(const MExpr&, const VarBinding<SNetCat>&);
template HomT<ExtendedNet> elaborate<ENetCat>(const MExpr&, const VarBinding<ENetCat>&);
template Hom transpose_curry<SNetCat>(const Hom&);
template HomX transpose_curry<ENetCat>(const HomX&);
template Hom transpose_uncurry<SNetCat>(const Hom&);
template HomX transpose_uncurry<ENetCat>(const HomX&);
template Hom hom_compose<SNetCat>(const Hom&, const Hom&);
template HomX hom_compose<ENetCat>(const HomX&, const HomX&);

}  // namespace boolcat
