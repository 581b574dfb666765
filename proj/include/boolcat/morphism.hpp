#ifndef BOOLCAT_MORPHISM_HPP
#define BOOLCAT_MORPHISM_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "boolcat/extended_net.hpp"
#include "boolcat/simple_net.hpp"

namespace boolcat {

struct TypeError : BoolcatError {
  TypeError(const std::string& msg, Formula a, Formula b)
      : BoolcatError(msg + ": " + to_string(a) + " vs " + to_string(b)),
        lhs(std::move(a)),
        rhs(std::move(b)) {}
  Formula lhs, rhs;
};

enum class Gen {
  Id,
  Assoc,
  AssocInv,
  Twist,
  Runit,
  RunitInv,
  Lunit,
  LunitInv,
  Coassoc,
  CoassocInv,
  Cotwist,
  Corunit,
  CorunitInv,
  Colunit,
  ColunitInv,
  SwitchS,   // (A|B)&C -> A|(B&C)
  SwitchL,   // A&(B|C) -> (A&B)|C
  SwitchM,   // A&(B|C) -> B|(A&C)
  SwitchR,   // (A|B)&C -> (A&C)|B
  Medial,    // (A&B)|(C&D) -> (A|C)&(B|D)
  NullaryMedial,    // t|t -> t
  NullaryComedial,  // f -> f&f
  Diag,
  Codiag,
  Proj,
  Coproj,
  Nid,    // t -> ~A|A
  Conid,  // A&~A -> f
  // Derived maps, expanded into the primitives above when elaborated.
  ProjL,
  ProjR,
  CoprojL,
  CoprojR,
  Mix,
  E1,
  E2,
  TensorMap,    // (A|B)&(C|D) -> (A|(B&C))|D
  CotensorMap,  // (A&(B|C))&D -> (A&B)|(C&D)
  Medial3,
  Comedial3,
  Diag3,
  Codiag3,
};

int gen_arity(Gen g);
const char* gen_name(Gen g);
bool gen_is_derived(Gen g);
// nullptr when the name is unknown.
const Gen* gen_by_name(const std::string& name);

struct MType {
  Formula src, tgt;
};

struct MExprNode;

// Free term language over the generators, closed under composition, the two
// tensors, and transposition; Var nodes stand for morphism parameters bound
// at elaboration time.
class MExpr {
 public:
  enum class Tag { Gen, Compose, TensAnd, TensOr, Curry, Uncurry, Var };

  MExpr() = default;

  static MExpr gen(::boolcat::Gen g, std::vector<Formula> params);
  static MExpr compose(MExpr later, MExpr earlier);
  static MExpr tens_and(MExpr l, MExpr r);
  static MExpr tens_or(MExpr l, MExpr r);
  static MExpr curry(MExpr inner);
  static MExpr uncurry(MExpr inner);
  static MExpr var(std::string name, Formula src, Formula tgt);

  Tag tag() const;
  ::boolcat::Gen gen_kind() const;
  const std::vector<Formula>& params() const;
  const MExpr& first() const;   // later / left / inner
  const MExpr& second() const;  // earlier / right
  const std::string& var_name() const;
  const Formula& var_src() const;
  const Formula& var_tgt() const;

  bool valid() const { return node_ != nullptr; }

 private:
  explicit MExpr(std::shared_ptr<const MExprNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const MExprNode> node_;
};

struct MExprNode {
  MExpr::Tag tag;
  Gen g{};
  std::vector<Formula> params;
  MExpr a, b;
  std::string name;
  Formula vsrc, vtgt;
};

inline MExpr::Tag MExpr::tag() const { return node_->tag; }
inline Gen MExpr::gen_kind() const { return node_->g; }
inline const std::vector<Formula>& MExpr::params() const { return node_->params; }
inline const MExpr& MExpr::first() const { return node_->a; }
inline const MExpr& MExpr::second() const { return node_->b; }
inline const std::string& MExpr::var_name() const { return node_->name; }
inline const Formula& MExpr::var_src() const { return node_->vsrc; }
inline const Formula& MExpr::var_tgt() const { return node_->vtgt; }

// Source/target of a generator instance.
MType gen_type(Gen g, const std::vector<Formula>& params);

// Bottom-up type computation; throws TypeError when composition or
// transposition shapes do not match.
MType type_of(const MExpr& e);

// Derived generators as composites of primitive ones.
MExpr expand_derived(Gen g, const std::vector<Formula>& params);

// Convenience builders used by the catalog and tests.
MExpr comp(std::vector<MExpr> chain);  // chain[0] . chain[1] . ... (rightmost first)
MExpr dual_of(const MExpr& e);         // f: A->B  to  ~f: ~B->~A
MExpr plus_of(const MExpr& f, const MExpr& g);
MExpr mid4_and(Formula a, Formula b, Formula c, Formula d);  // (A&B)&(C&D)->(A&C)&(B&D)
MExpr mid4_or(Formula a, Formula b, Formula c, Formula d);   // (A|B)|(C|D)->(A|C)|(B|D)

// Coherence-only rebracketing/reordering between two formulas with the same
// multiset of maximal non-& (resp. non-|) blocks; built from assoc/twist
// (resp. coassoc/cotwist) applied under tensors of identities.
MExpr and_reshape(const Formula& from, const Formula& to);
MExpr or_reshape(const Formula& from, const Formula& to);

// Replaces atoms by formulas throughout an expression's object parameters
// (negated occurrences receive the negated replacement). Used to transfer a
// coherence recipe computed on placeholder atoms onto concrete objects.
Formula substitute_atoms(const Formula& f, const std::map<std::string, Formula>& subst);
MExpr substitute_atoms(const MExpr& e, const std::map<std::string, Formula>& subst);

std::string to_string(const MExpr& e);

// An arrow A -> B housed as a net over (~A, B).
template <typename NetT>
struct HomT {
  Formula src, tgt;
  NetT net;
};

using Hom = HomT<SimpleNet>;
using HomX = HomT<ExtendedNet>;

// The net of one generator over the one-sided sequent (~src, tgt): identity
// bundles between the parameter occurrences, self-links on every exposed t.
SimpleNet generator_net(Gen g, const std::vector<Formula>& params);

// Cut elimination as path composition: a link in the result iff a directed
// path through the identified cut leaves exists in the stacked nets.
SimpleNet compose_simple(const SimpleNet& g, const SimpleNet& f);

struct SNetCat {
  using Net = SimpleNet;
  static Net lift(SimpleNet n) { return n; }
  static Net compose(const Net& g, const Net& f) { return compose_simple(g, f); }
  static Net jux_and(const Net& f, const Net& g) { return juxtapose_and(f, g); }
  static Net jux_or(const Net& f, const Net& g) { return juxtapose_or(f, g); }
  static Net relocate(const Net& n, Sequent s, const std::vector<LeafRef>& map);
  static bool equal(const Net& a, const Net& b) { return a == b; }
};

struct ENetCat {
  using Net = ExtendedNet;
  static Net lift(SimpleNet n) { return ExtendedNet::from_simple(n); }
  static Net compose(const Net& g, const Net& f) { return compose_extended(g, f); }
  static Net jux_and(const Net& f, const Net& g) { return juxtapose_and_extended(f, g); }
  static Net jux_or(const Net& f, const Net& g) { return juxtapose_or_extended(f, g); }
  static Net relocate(const Net& n, Sequent s, const std::vector<LeafRef>& map) {
    return relocate_extended(n, std::move(s), map);
  }
  static bool equal(const Net& a, const Net& b) { return equal_extended(a, b); }
};

template <typename Cat>
using VarBinding = std::map<std::string, HomT<typename Cat::Net>>;

// Hom-level transposition along Hom(A&B, C) = Hom(A, ~B|C).
template <typename Cat>
HomT<typename Cat::Net> transpose_curry(const HomT<typename Cat::Net>& h);
template <typename Cat>
HomT<typename Cat::Net> transpose_uncurry(const HomT<typename Cat::Net>& h);

template <typename Cat>
HomT<typename Cat::Net> hom_compose(const HomT<typename Cat::Net>& g,
                                    const HomT<typename Cat::Net>& f);

template <typename Cat>
HomT<typename Cat::Net> elaborate(const MExpr& e, const VarBinding<Cat>& vars = {});

extern template HomT<SimpleNet> elaborate<SNetCat>(const MExpr&, const VarBinding<SNetCat>&);
extern template HomT<ExtendedNet> elaborate<ENetCat>(const MExpr&, const VarBinding<ENetCat>&);
extern template Hom transpose_curry<SNetCat>(const Hom&);
extern template HomX transpose_curry<ENetCat>(const HomX&);
extern template Hom transpose_uncurry<SNetCat>(const Hom&);
extern template HomX transpose_uncurry<ENetCat>(const HomX&);
extern template Hom hom_compose<SNetCat>(const Hom&, const Hom&);
extern template HomX hom_compose<ENetCat>(const HomX&, const HomX&);

}  // namespace boolcat

#endif
