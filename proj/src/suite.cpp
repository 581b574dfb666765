#include "boolcat/suite.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace boolcat {

Sampler::Sampler(std::uint64_t seed, int num_atoms, int max_depth)
    : rng_(seed), num_atoms_(std::max(1, num_atoms)), max_depth_(std::max(0, max_depth)) {}

std::uint64_t Sampler::below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }

bool Sampler::chance(int percent) {
  return below(100) < static_cast<std::uint64_t>(percent);
}

namespace {

std::string atom_name(int i) { return std::string(1, static_cast<char>('a' + i)); }

}  // namespace

Formula Sampler::formula(int depth) {
  if (depth <= 0 || chance(35)) {
    switch (below(4)) {
      case 0:
        return Formula::atom(atom_name(static_cast<int>(below(num_atoms_))));
      case 1:
        return Formula::neg_atom(atom_name(static_cast<int>(below(num_atoms_))));
      case 2:
        return Formula::top();
      default:
        return Formula::bot();
    }
  }
  Formula l = formula(depth - 1);
  Formula r = formula(depth - 1);
  return chance(50) ? Formula::conj(l, r) : Formula::disj(l, r);
}

Formula Sampler::formula() { return formula(max_depth_); }

namespace {

Hom identity_hom(const Formula& a) {
  return Hom{a, a, generator_net(Gen::Id, {a})};
}

Hom elab(const MExpr& e) { return elaborate<SNetCat>(e); }

}  // namespace

// One random post-composition step applicable at the target `t`; returns an
// invalid MExpr when the dice pick an inapplicable step.
namespace {

MExpr forward_step(Sampler& s, const Formula& t, int num_atoms) {
  switch (s.below(14)) {
    case 0:
      return MExpr::gen(Gen::Proj, {t});
    case 1:
      return MExpr::gen(Gen::Diag, {t});
    case 2:
      return MExpr::gen(Gen::RunitInv, {t});
    case 3:
      return MExpr::gen(Gen::CorunitInv, {t});
    case 4: {
      Formula c = s.chance(50) ? Formula::atom(atom_name(static_cast<int>(s.below(num_atoms))))
                               : Formula::neg_atom(atom_name(static_cast<int>(s.below(num_atoms))));
      return s.chance(50) ? MExpr::gen(Gen::CoprojL, {t, c}) : MExpr::gen(Gen::CoprojR, {c, t});
    }
    case 5:
      if (t.kind() == Formula::Kind::Top) {
        Formula x = s.chance(50) ? Formula::atom(atom_name(static_cast<int>(s.below(num_atoms))))
                                 : Formula::top();
        return MExpr::gen(Gen::Nid, {x});
      }
      return {};
    case 6:
      if (t.kind() == Formula::Kind::Bot)
        return MExpr::gen(Gen::Coproj,
                          {Formula::atom(atom_name(static_cast<int>(s.below(num_atoms))))});
      return {};
    case 7:
      if (t.kind() == Formula::Kind::And)
        return s.chance(50) ? MExpr::gen(Gen::ProjL, {t.left(), t.right()})
                            : MExpr::gen(Gen::ProjR, {t.left(), t.right()});
      return {};
    case 8:
      if (t.kind() == Formula::Kind::And) return MExpr::gen(Gen::Mix, {t.left(), t.right()});
      if (t.kind() == Formula::Kind::Or) return MExpr::gen(Gen::Cotwist, {t.left(), t.right()});
      return {};
    case 9:
      if (t.kind() == Formula::Kind::And) return MExpr::gen(Gen::Twist, {t.left(), t.right()});
      return {};
    case 10:
      if (t.kind() == Formula::Kind::Or && t.left() == t.right())
        return MExpr::gen(Gen::Codiag, {t.left()});
      return {};
    case 11:
      if (t.kind() == Formula::Kind::And && t.left().kind() == Formula::Kind::Or)
        return s.chance(50)
                   ? MExpr::gen(Gen::SwitchS, {t.left().left(), t.left().right(), t.right()})
                   : MExpr::gen(Gen::SwitchR, {t.left().left(), t.left().right(), t.right()});
      if (t.kind() == Formula::Kind::And && t.right().kind() == Formula::Kind::Or)
        return s.chance(50)
                   ? MExpr::gen(Gen::SwitchL, {t.left(), t.right().left(), t.right().right()})
                   : MExpr::gen(Gen::SwitchM, {t.left(), t.right().left(), t.right().right()});
      return {};
    case 12:
      if (t.kind() == Formula::Kind::Or && t.left().kind() == Formula::Kind::And &&
          t.right().kind() == Formula::Kind::And)
        return MExpr::gen(Gen::Medial, {t.left().left(), t.left().right(), t.right().left(),
                                        t.right().right()});
      return {};
    case 13:
      if (t.kind() == Formula::Kind::And && t.right().kind() == Formula::Kind::And)
        return MExpr::gen(Gen::Assoc, {t.left(), t.right().left(), t.right().right()});
      if (t.kind() == Formula::Kind::Or && t.right().kind() == Formula::Kind::Or)
        return MExpr::gen(Gen::Coassoc, {t.left(), t.right().left(), t.right().right()});
      if (t.kind() == Formula::Kind::And && t.right().kind() == Formula::Kind::Top)
        return MExpr::gen(Gen::Runit, {t.left()});
      if (t.kind() == Formula::Kind::Or && t.right().kind() == Formula::Kind::Bot)
        return MExpr::gen(Gen::Corunit, {t.left()});
      return {};
  }
  return {};
}

// One random pre-composition step producing the current source `src`.
MExpr backward_step(Sampler& s, const Formula& src, int num_atoms) {
  switch (s.below(12)) {
    case 0:
      return MExpr::gen(Gen::Runit, {src});  // src&t -> src
    case 1:
      return MExpr::gen(Gen::Lunit, {src});
    case 2:
      return MExpr::gen(Gen::Corunit, {src});
    case 3:
      return MExpr::gen(Gen::Codiag, {src});  // src|src -> src
    case 4: {
      Formula c = s.chance(50) ? Formula::atom(atom_name(static_cast<int>(s.below(num_atoms))))
                               : Formula::top();
      return s.chance(50) ? MExpr::gen(Gen::ProjL, {src, c}) : MExpr::gen(Gen::ProjR, {c, src});
    }
    case 5:
      if (src.kind() == Formula::Kind::Top)
        return MExpr::gen(Gen::Proj,
                          {Formula::atom(atom_name(static_cast<int>(s.below(num_atoms))))});
      return {};
    case 6:
      if (src.kind() == Formula::Kind::Bot) {
        Formula x = Formula::atom(atom_name(static_cast<int>(s.below(num_atoms))));
        return MExpr::gen(Gen::Conid, {x});
      }
      return {};
    case 7:
      if (src.kind() == Formula::Kind::Or) return MExpr::gen(Gen::Mix, {src.left(), src.right()});
      return {};
    case 8:
      if (src.kind() == Formula::Kind::And && src.left() == src.right())
        return MExpr::gen(Gen::Diag, {src.left()});
      return {};
    case 9:
      if (src.kind() == Formula::Kind::And) return MExpr::gen(Gen::Twist, {src.right(), src.left()});
      if (src.kind() == Formula::Kind::Or)
        return MExpr::gen(Gen::Cotwist, {src.right(), src.left()});
      return {};
    case 10:
      if (src.kind() == Formula::Kind::Or && src.left().kind() == Formula::Kind::And)
        return MExpr::gen(Gen::SwitchL,
                          {src.left().left(), src.left().right(), src.right()});
      if (src.kind() == Formula::Kind::Or && src.right().kind() == Formula::Kind::And)
        return MExpr::gen(Gen::SwitchS,
                          {src.left(), src.right().left(), src.right().right()});
      return {};
    case 11:
      if (src.kind() == Formula::Kind::And && src.left().kind() == Formula::Kind::Or &&
          src.right().kind() == Formula::Kind::Or)
        return MExpr::gen(Gen::Medial, {src.left().left(), src.right().left(),
                                        src.left().right(), src.right().right()});
      return {};
  }
  return {};
}

}  // namespace

Hom Sampler::hom_from(const Formula& src) {
  Hom h = identity_hom(src);
  int steps = static_cast<int>(below(4));
  for (int i = 0; i < steps; ++i) {
    MExpr step = forward_step(*this, h.tgt, num_atoms_);
    if (!step.valid()) continue;
    h = hom_compose<SNetCat>(elab(step), h);
  }
  return h;
}

Hom Sampler::hom_into(const Formula& tgt) {
  Hom h = identity_hom(tgt);
  int steps = static_cast<int>(below(4));
  for (int i = 0; i < steps; ++i) {
    MExpr step = backward_step(*this, h.src, num_atoms_);
    if (!step.valid()) continue;
    h = hom_compose<SNetCat>(h, elab(step));
  }
  return h;
}

Hom Sampler::hom() { return hom_from(formula()); }

Hom Sampler::hom_mutate(const Hom& base) {
  const SimpleNet& net = base.net;
  const LeafTable& t = net.table();
  // Typed candidate pairs not already present.
  std::vector<std::pair<int, int>> candidates;
  for (int i = 0; i < t.size(); ++i) {
    if (t.label(i).kind() != Formula::Kind::NegAtom) continue;
    for (int j = 0; j < t.size(); ++j) {
      if (i == j || t.label(j).kind() != Formula::Kind::Atom) continue;
      if (t.label(i).atom_name() != t.label(j).atom_name()) continue;
      if (!net.has_link(i, j)) candidates.emplace_back(i, j);
    }
  }
  std::vector<std::pair<int, int>> links = net.links();
  for (auto c : candidates)
    if (chance(30)) links.push_back(c);
  SimpleNet grown(SimpleNet::Unchecked{}, net.sequent(), std::move(links));
  // Try dropping one link while staying valid and correct.
  if (!grown.links().empty() && chance(40)) {
    std::size_t k = below(grown.links().size());
    auto victim = grown.links()[k];
    if (victim.first != victim.second) {  // keep mandatory t self-links
      std::vector<std::pair<int, int>> reduced = grown.links();
      reduced.erase(reduced.begin() + static_cast<long>(k));
      SimpleNet shrunk(SimpleNet::Unchecked{}, net.sequent(), std::move(reduced));
      try {
        if (is_correct(shrunk)) return {base.src, base.tgt, shrunk};
      } catch (const PruningBudgetError&) {
      }
    }
  }
  return {base.src, base.tgt, grown};
}

bool Sampler::hom_at(const Formula& src, const Formula& tgt, Hom& out) {
  if (src == tgt) {
    out = hom_mutate(identity_hom(src));
    return true;
  }
  // Random subsets of the typed candidate links, densest last.
  Sequent seq({negate(src), tgt});
  LeafTable t(seq);
  std::vector<std::pair<int, int>> mandatory, candidates;
  for (int i = 0; i < t.size(); ++i) {
    if (t.label(i).kind() == Formula::Kind::Top) mandatory.emplace_back(i, i);
    if (t.label(i).kind() != Formula::Kind::NegAtom) continue;
    for (int j = 0; j < t.size(); ++j) {
      if (i == j || t.label(j).kind() != Formula::Kind::Atom) continue;
      if (t.label(i).atom_name() == t.label(j).atom_name()) candidates.emplace_back(i, j);
    }
  }
  for (int attempt = 0; attempt < 12; ++attempt) {
    int keep = 40 + attempt * 5;
    std::vector<std::pair<int, int>> links = mandatory;
    for (auto c : candidates)
      if (chance(keep)) links.push_back(c);
    SimpleNet net(SimpleNet::Unchecked{}, seq, std::move(links));
    try {
      if (is_correct(net)) {
        out = {src, tgt, std::move(net)};
        return true;
      }
    } catch (const PruningBudgetError&) {
      return false;
    }
  }
  return false;
}

HomX Sampler::lift_mutate(const Hom& h) {
  ExtendedNet net = ExtendedNet::from_simple(h.net);
  // Bump multiplicities on a few atom links.
  std::vector<std::pair<NodeId, NodeId>> atom_links;
  for (const auto& [pair, c] : net.links())
    if (pair.first != pair.second) atom_links.push_back(pair);
  for (const auto& pair : atom_links)
    if (chance(25)) net.add_count(pair.first, pair.second, 1 + static_cast<std::uint32_t>(below(2)));
  // Occasionally bundle same-atom links through an anchor.
  if (!atom_links.empty() && chance(35)) {
    std::map<std::string, std::vector<std::pair<NodeId, NodeId>>> by_atom;
    const LeafTable& t = net.table();
    for (const auto& pair : atom_links) {
      const Formula& lab = t.label(pair.first);
      by_atom[lab.atom_name()].push_back(pair);
    }
    for (const auto& [atom, group] : by_atom) {
      std::set<NodeId> srcs, dsts;
      for (auto [s, d] : group) {
        srcs.insert(s);
        dsts.insert(d);
      }
      if (srcs.size() < 2 || dsts.size() < 2) continue;
      int k = net.add_anchor(atom);
      NodeId kn = anchor_node(k);
      for (auto [s, d] : group) net.set_count(s, d, 0);
      for (NodeId s : srcs) net.set_count(s, kn, 1);
      for (NodeId d : dsts) net.set_count(kn, d, 1);
      break;
    }
  }
  return {h.src, h.tgt, std::move(net)};
}

namespace {

struct BindingReject {};

template <typename Cat>
struct Built {
  ExprEnv env;
  VarBinding<Cat> vars;
  std::map<std::string, Hom> simple_bases;  // plain-sampled arrows, pre-lift
  std::string desc;
};

bool is_plain_var(const std::string& tpl) {
  if (tpl.empty() || !std::isupper(static_cast<unsigned char>(tpl[0]))) return false;
  for (char c : tpl)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '\'') return false;
  return true;
}

std::vector<std::string> template_vars(const std::string& tpl) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < tpl.size();) {
    if (std::isupper(static_cast<unsigned char>(tpl[i]))) {
      std::size_t j = i;
      while (j < tpl.size() &&
             (std::isalnum(static_cast<unsigned char>(tpl[j])) || tpl[j] == '\''))
        ++j;
      out.push_back(tpl.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

template <typename Cat>
HomT<typename Cat::Net> lift_for(Sampler& s, const Hom& h);

template <>
Hom lift_for<SNetCat>(Sampler&, const Hom& h) {
  return h;
}

template <>
HomX lift_for<ENetCat>(Sampler& s, const Hom& h) {
  return s.lift_mutate(h);
}

template <typename Cat>
void bind_endpoint(ExprEnv& env, const std::string& tpl, const Formula& actual) {
  if (is_plain_var(tpl) && !env.objects.count(tpl)) {
    env.objects[tpl] = actual;
    return;
  }
  Formula expected = instantiate_formula(tpl, env.objects);
  if (expected != actual) throw BindingReject{};
}

// Builds one binding: free object parameters first (minimal, preset, or
// random), then morphism parameters in declaration order.
template <typename Cat>
Built<Cat> build_binding(const Equation& eq, Sampler& s, bool minimal,
                         const std::map<std::string, Formula>* preset) {
  Built<Cat> b;
  if (preset) {
    b.env.objects = *preset;
  } else {
    for (const std::string& p : eq.params)
      b.env.objects[p] = minimal ? Formula::atom("a") : s.formula();
  }

  for (const MVarDecl& mv : eq.mvars) {
    // Compound endpoint templates fix the shape: their leftover object
    // variables are sampled up front.
    for (const std::string& tpl : {mv.src, mv.tgt}) {
      if (is_plain_var(tpl)) continue;
      for (const std::string& v : template_vars(tpl))
        if (!b.env.objects.count(v))
          b.env.objects[v] = minimal ? Formula::atom("a") : s.formula();
    }
    bool src_free = is_plain_var(mv.src) && !b.env.objects.count(mv.src);
    bool tgt_free = is_plain_var(mv.tgt) && !b.env.objects.count(mv.tgt);
    HomT<typename Cat::Net> hom;
    switch (mv.mode) {
      case MVarDecl::Mode::Plain: {
        Hom sh;
        if (src_free && tgt_free) {
          sh = minimal ? Hom{Formula::atom("a"), Formula::atom("a"),
                             generator_net(Gen::Id, {Formula::atom("a")})}
                       : s.hom();
        } else if (!src_free && tgt_free) {
          Formula src = instantiate_formula(mv.src, b.env.objects);
          sh = minimal ? Hom{src, src, generator_net(Gen::Id, {src})} : s.hom_from(src);
        } else if (src_free && !tgt_free) {
          Formula tgt = instantiate_formula(mv.tgt, b.env.objects);
          sh = minimal ? Hom{tgt, tgt, generator_net(Gen::Id, {tgt})} : s.hom_into(tgt);
        } else {
          Formula src = instantiate_formula(mv.src, b.env.objects);
          Formula tgt = instantiate_formula(mv.tgt, b.env.objects);
          Hom candidate;
          if (s.hom_at(src, tgt, candidate)) {
            sh = candidate;
          } else {
            // Fall back to perturbing an earlier arrow of the same type.
            const Hom* base = nullptr;
            for (const auto& [name, h] : b.simple_bases)
              if (h.src == src && h.tgt == tgt) base = &h;
            if (!base) throw BindingReject{};
            sh = s.hom_mutate(*base);
          }
        }
        bind_endpoint<Cat>(b.env, mv.src, sh.src);
        bind_endpoint<Cat>(b.env, mv.tgt, sh.tgt);
        b.simple_bases[mv.name] = sh;
        hom = lift_for<Cat>(s, sh);
        break;
      }
      case MVarDecl::Mode::Via: {
        MExpr e = expr_from_sexpr(mv.via, b.env);
        hom = elaborate<Cat>(e, b.vars);
        bind_endpoint<Cat>(b.env, mv.src, hom.src);
        bind_endpoint<Cat>(b.env, mv.tgt, hom.tgt);
        break;
      }
      case MVarDecl::Mode::Pool: {
        std::size_t pick = minimal ? 0 : s.below(mv.pool.size());
        bool placed = false;
        for (std::size_t off = 0; off < mv.pool.size() && !placed; ++off) {
          const SExpr& item = mv.pool[(pick + off) % mv.pool.size()];
          try {
            MExpr e = expr_from_sexpr(item, b.env);
            HomT<typename Cat::Net> h = elaborate<Cat>(e, b.vars);
            ExprEnv saved = b.env;
            try {
              bind_endpoint<Cat>(b.env, mv.src, h.src);
              bind_endpoint<Cat>(b.env, mv.tgt, h.tgt);
            } catch (const BindingReject&) {
              b.env = saved;
              continue;
            }
            hom = std::move(h);
            placed = true;
          } catch (const BoolcatError&) {
            continue;
          }
        }
        if (!placed) throw BindingReject{};
        break;
      }
    }
    b.env.mvars[mv.name] = MType{hom.src, hom.tgt};
    b.vars[mv.name] = std::move(hom);
  }

  std::ostringstream desc;
  for (const auto& [name, f] : b.env.objects) desc << name << "=" << to_string(f) << " ";
  for (const MVarDecl& mv : eq.mvars) {
    const auto& h = b.vars.at(mv.name);
    desc << "$" << mv.name << ":" << to_string(h.src) << "->" << to_string(h.tgt) << " ";
  }
  b.desc = desc.str();
  return b;
}

template <typename Cat>
std::string net_dump(const typename Cat::Net& n) {
  return net_to_json(n).dump();
}

// Checks one binding. Returns true when the two sides agree (for order
// entries: when the order relation holds).
template <typename Cat>
bool check_binding(const Equation& eq, const Built<Cat>& b, std::string* witness) {
  MExpr lhs = expr_from_sexpr(eq.lhs, b.env);
  MExpr rhs = expr_from_sexpr(eq.rhs, b.env);
  auto l = elaborate<Cat>(lhs, b.vars);
  auto r = elaborate<Cat>(rhs, b.vars);
  if (l.src != r.src || l.tgt != r.tgt)
    throw TypeError("equation " + eq.id + ": sides have different types",
                    Formula::conj(l.src, l.tgt), Formula::conj(r.src, r.tgt));
  bool ok;
  if (eq.order) {
    if constexpr (std::is_same_v<Cat, SNetCat>) {
      ok = leq(r.net, l.net);
    } else {
      throw BoolcatError("order entries only run in the simple-net category");
    }
  } else {
    ok = Cat::equal(l.net, r.net);
  }
  if (!ok && witness && witness->empty()) {
    *witness = "binding: " + b.desc + "\n  lhs: " + net_dump<Cat>(l.net) +
               "\n  rhs: " + net_dump<Cat>(r.net);
  }
  return ok;
}

// Uniqueness of the monoid unit: over (t, A), a linking f is a unit for the
// disjunction monoid iff it is the canonical weakening net.
template <typename Cat>
bool check_unique_unit(const Equation& eq, const Formula& a, std::string* witness) {
  Formula bot = Formula::bot();
  Hom coproj{bot, a, generator_net(Gen::Coproj, {a})};
  Sequent seq({Formula::top(), a});
  LeafTable t(seq);
  std::vector<std::pair<int, int>> mandatory, candidates;
  for (int i = 0; i < t.size(); ++i) {
    if (t.label(i).kind() == Formula::Kind::Top) mandatory.emplace_back(i, i);
    if (t.label(i).kind() != Formula::Kind::NegAtom) continue;
    for (int j = 0; j < t.size(); ++j) {
      if (i != j && t.label(j).kind() == Formula::Kind::Atom &&
          t.label(i).atom_name() == t.label(j).atom_name())
        candidates.emplace_back(i, j);
    }
  }
  if (candidates.size() > 12) return true;  // enumeration out of reach; nothing to refute
  MExpr lhs_tpl = MExpr::gen(Gen::Corunit, {a});
  for (std::uint64_t mask = 0; mask < (1ull << candidates.size()); ++mask) {
    std::vector<std::pair<int, int>> links = mandatory;
    for (std::size_t k = 0; k < candidates.size(); ++k)
      if (mask & (1ull << k)) links.push_back(candidates[k]);
    SimpleNet fnet(SimpleNet::Unchecked{}, seq, std::move(links));
    HomT<typename Cat::Net> f{bot, a, Cat::lift(fnet)};
    // premise: corunit_A = codiag_A . (id_A | f)
    MExpr rhs_tpl = MExpr::compose(
        MExpr::gen(Gen::Codiag, {a}),
        MExpr::tens_or(MExpr::gen(Gen::Id, {a}), MExpr::var("f", bot, a)));
    VarBinding<Cat> vars{{"f", f}};
    auto l = elaborate<Cat>(lhs_tpl, vars);
    auto r = elaborate<Cat>(rhs_tpl, vars);
    bool premise = Cat::equal(l.net, r.net);
    bool is_coproj = Cat::equal(f.net, Cat::lift(coproj.net));
    if (premise != is_coproj) {
      if (witness && witness->empty())
        *witness = "A=" + to_string(a) + " candidate f: " + net_dump<Cat>(f.net) +
                   (premise ? " satisfies the unit law but is not the weakening net"
                            : " is the weakening net but fails the unit law");
      return false;
    }
  }
  (void)eq;
  return true;
}

// Exhaustive binding universes, tiered by the number of free parameters.
std::vector<Formula> universe(int atoms, int depth) {
  std::vector<Formula> leaves;
  for (int i = 0; i < atoms; ++i) {
    leaves.push_back(Formula::atom(atom_name(i)));
    leaves.push_back(Formula::neg_atom(atom_name(i)));
  }
  leaves.push_back(Formula::top());
  leaves.push_back(Formula::bot());
  if (depth == 0) return leaves;
  std::vector<Formula> out = leaves;
  for (const Formula& l : leaves)
    for (const Formula& r : leaves) {
      out.push_back(Formula::conj(l, r));
      out.push_back(Formula::disj(l, r));
    }
  return out;
}

}  // namespace

bool SuiteReport::ok() const {
  for (const auto& r : results)
    if (!r.skipped && (!r.pass || !r.error.empty())) return false;
  return true;
}

namespace {

template <typename Cat>
void run_equation(const Equation& eq, CatKind cat, const SamplerConfig& cfg, bool exhaustive,
                  EquationOutcome& out) {
  Equation::Expect expect = cat == CatKind::SNet ? eq.snet : eq.enet;
  if (expect == Equation::Expect::Skip || (eq.order && cat == CatKind::ENet)) {
    out.skipped = true;
    out.pass = true;
    return;
  }
  out.expected_holds = expect == Equation::Expect::Holds;

  std::hash<std::string> hasher;
  std::uint64_t eq_seed = cfg.seed * 0x9e3779b97f4a7c15ull + hasher(eq.id) +
                          (cat == CatKind::ENet ? 0x517cc1b727220a95ull : 0);

  auto run_one = [&](Sampler& s, bool minimal, const std::map<std::string, Formula>* preset) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      try {
        if (!eq.special.empty()) {
          if (eq.special != "unique-unit")
            throw BoolcatError("unknown special check " + eq.special);
          Formula a = preset       ? preset->begin()->second
                      : minimal    ? Formula::atom("a")
                                   : s.formula();
          ++out.bindings_checked;
          if (!check_unique_unit<Cat>(eq, a, &out.witness)) ++out.unequal;
          return;
        }
        Built<Cat> b = build_binding<Cat>(eq, s, minimal, preset);
        ++out.bindings_checked;
        if (!check_binding<Cat>(eq, b, &out.witness)) ++out.unequal;
        return;
      } catch (const BindingReject&) {
        if (preset) return;  // this tuple admits no arrows; skip it
        continue;
      }
    }
  };

  if (!exhaustive) {
    for (int i = 0; i < cfg.bindings; ++i) {
      Sampler s(eq_seed + static_cast<std::uint64_t>(i) * 0x2545f4914f6cdd1dull, cfg.num_atoms,
                cfg.max_depth);
      run_one(s, i == 0 && expect == Equation::Expect::Fails, nullptr);
    }
  } else {
    // Tiered sweep: full two-atom depth-one universe up to two parameters,
    // smaller universes beyond, with a deterministic subsample once the grid
    // outgrows the budget.
    int n = static_cast<int>(eq.params.size());
    std::vector<Formula> u;
    std::uint64_t extra = 0;
    if (n <= 2) {
      u = universe(2, 1);
    } else if (n == 3) {
      u = universe(1, 1);
    } else if (n == 4) {
      u = universe(2, 0);
      extra = 1500;
    } else {
      u = universe(1, 0);
      extra = 500;
    }
    std::uint64_t grid = 1;
    bool overflow = false;
    for (int i = 0; i < n; ++i) {
      grid *= u.size();
      if (grid > 70000) {
        overflow = true;
        break;
      }
    }
    std::uint64_t tuples = overflow ? 4096 : grid;
    if (n == 0) tuples = 50;  // everything is morphism-sampled
    Sampler pick(eq_seed ^ 0xabcdef0123456789ull, cfg.num_atoms, cfg.max_depth);
    for (std::uint64_t idx = 0; idx < tuples; ++idx) {
      std::map<std::string, Formula> preset;
      std::uint64_t rest = idx;
      for (int k = 0; k < n; ++k) {
        std::uint64_t cell = overflow ? pick.below(u.size()) : rest % u.size();
        preset[eq.params[k]] = u[cell];
        rest /= u.size();
      }
      Sampler s(eq_seed + idx * 0x2545f4914f6cdd1dull, cfg.num_atoms, cfg.max_depth);
      run_one(s, false, n == 0 ? nullptr : &preset);
    }
    std::vector<Formula> full = universe(2, 1);
    for (std::uint64_t i = 0; i < extra; ++i) {
      Sampler s(eq_seed + (i + 1) * 0x9e3779b97f4a7c15ull, cfg.num_atoms, cfg.max_depth);
      std::map<std::string, Formula> preset;
      for (int k = 0; k < n; ++k)
        preset[eq.params[k]] = full[s.below(full.size())];
      run_one(s, false, &preset);
    }
  }

  if (out.expected_holds) {
    out.pass = out.unequal == 0 && out.bindings_checked > 0;
  } else {
    out.pass = out.unequal > 0;
    if (!out.pass && out.witness.empty())
      out.witness = "expected a counterexample but every binding agreed";
  }
}

}  // namespace

SuiteReport run_suite(const std::vector<Equation>& catalog, const std::string& level,
                      CatKind cat, const SamplerConfig& cfg, bool exhaustive) {
  SuiteReport report;
  report.level = level;
  report.cat = cat;
  report.cfg = cfg;
  report.exhaustive = exhaustive;
  for (const Equation& eq : catalog) {
    if (level != "all" && eq.level != level) continue;
    EquationOutcome out;
    out.id = eq.id;
    out.level = eq.level;
    try {
      if (cat == CatKind::SNet)
        run_equation<SNetCat>(eq, cat, cfg, exhaustive, out);
      else
        run_equation<ENetCat>(eq, cat, cfg, exhaustive, out);
    } catch (const std::exception& e) {
      out.error = e.what();
      out.pass = false;
    }
    report.results.push_back(std::move(out));
  }
  return report;
}

std::string report_table(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite level=" << r.level << " category=" << cat_name(r.cat) << " seed=" << r.cfg.seed
      << (r.exhaustive ? " exhaustive" : "") << "\n";
  std::size_t width = 4;
  for (const auto& e : r.results) width = std::max(width, e.id.size());
  for (const auto& e : r.results) {
    out << "  " << e.id << std::string(width - e.id.size() + 2, ' ');
    if (e.skipped) {
      out << "skip\n";
      continue;
    }
    if (!e.error.empty()) {
      out << "ERROR " << e.error << "\n";
      continue;
    }
    out << (e.pass ? "pass" : "FAIL") << "  [" << (e.expected_holds ? "holds" : "fails")
        << " expected; " << e.bindings_checked << " bindings, " << e.unequal << " unequal]\n";
    if (!e.pass && !e.witness.empty()) out << "    " << e.witness << "\n";
  }
  out << (r.ok() ? "all expectations met" : "EXPECTATION FAILURES PRESENT") << "\n";
  return out.str();
}

ordered_json report_json(const SuiteReport& r) {
  ordered_json out;
  out["level"] = r.level;
  out["category"] = cat_name(r.cat);
  out["seed"] = r.cfg.seed;
  out["bindings"] = r.cfg.bindings;
  out["max_depth"] = r.cfg.max_depth;
  out["atoms"] = r.cfg.num_atoms;
  out["exhaustive"] = r.exhaustive;
  ordered_json results = ordered_json::array();
  for (const auto& e : r.results) {
    ordered_json je;
    je["id"] = e.id;
    je["level"] = e.level;
    if (e.skipped) {
      je["status"] = "skip";
    } else if (!e.error.empty()) {
      je["status"] = "error";
      je["error"] = e.error;
    } else {
      je["status"] = e.pass ? "pass" : "fail";
      je["expected"] = e.expected_holds ? "holds" : "fails";
      je["bindings"] = e.bindings_checked;
      je["unequal"] = e.unequal;
      if (!e.witness.empty()) je["witness"] = e.witness;
    }
    results.push_back(je);
  }
  out["results"] = results;
  out["ok"] = r.ok();
  return out;
}

}  // namespace boolcat
