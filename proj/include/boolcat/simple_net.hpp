#ifndef BOOLCAT_SIMPLE_NET_HPP
#define BOOLCAT_SIMPLE_NET_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "boolcat/formula.hpp"

namespace boolcat {

struct PruningBudgetError : BoolcatError {
  using BoolcatError::BoolcatError;
};

// Number of conjunction nodes a sequent may have before pruning-based
// correctness refuses to enumerate. Overridable via BOOLCAT_PRUNING_CAP.
int pruning_cap();
void set_pruning_cap(int cap);

// Dense view of a sequent's leaves plus its conjunction nodes; the basis for
// linking storage and pruning enumeration. Leaf ids follow the left-to-right
// depth-first order of `leaves()`.
class LeafTable {
 public:
  LeafTable() = default;
  explicit LeafTable(const Sequent& s);

  int size() const { return static_cast<int>(entries_.size()); }
  const LeafInfo& info(int id) const { return entries_[id]; }
  const Formula& label(int id) const { return entries_[id].label; }
  // -1 when the ref does not name a leaf of the sequent.
  int id_of(const LeafRef& r) const;

  int and_count() const { return static_cast<int>(and_nodes_.size()); }
  const LeafRef& and_addr(int k) const { return and_nodes_[k]; }

  // Bit k of a pruning word chooses the child of conjunction k: 0 keeps L,
  // 1 keeps R. A leaf survives pruning p iff ((p ^ req) & mask) == 0.
  std::uint32_t mask(int id) const { return masks_[id]; }
  std::uint32_t req(int id) const { return reqs_[id]; }
  bool survives(int id, std::uint32_t pruning) const {
    return ((pruning ^ reqs_[id]) & masks_[id]) == 0;
  }

 private:
  std::vector<LeafInfo> entries_;
  std::vector<LeafRef> and_nodes_;
  std::vector<std::uint32_t> masks_, reqs_;
};

enum class ViolationKind {
  BadLeafRef,
  TopWithoutSelfLink,
  IllTypedLink,
  BadLinkCount,    // extended nets: t self-link count must be 1
  AnchorDegree,    // extended nets: anchors need >= 2 in and out
  AnchorSelfLink,  // extended nets: anchors never self-link
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

using LinkRef = std::pair<LeafRef, LeafRef>;

// Checks the linking conditions: every t leaf self-linked, every link either
// a t self-link or from a ~a leaf to a distinct a leaf, no links on f.
std::vector<Violation> validate(const Sequent& s, const std::vector<LinkRef>& links);

class SimpleNet {
 public:
  struct Unchecked {};

  SimpleNet() = default;
  // Throws BoolcatError when the linking is invalid for the sequent.
  SimpleNet(Sequent s, const std::vector<LinkRef>& links);
  // For operations that preserve validity by construction. `links` must be
  // over leaf ids of the sequent's LeafTable; sorted + deduplicated here.
  SimpleNet(Unchecked, Sequent s, std::vector<std::pair<int, int>> links);

  const Sequent& sequent() const { return sequent_; }
  const LeafTable& table() const { return table_; }
  const std::vector<std::pair<int, int>>& links() const { return links_; }
  std::vector<LinkRef> link_refs() const;
  bool has_link(int src, int dst) const;

  bool operator==(const SimpleNet& other) const;
  bool operator!=(const SimpleNet& other) const { return !(*this == other); }

 private:
  Sequent sequent_;
  LeafTable table_;
  std::vector<std::pair<int, int>> links_;  // sorted, unique
};

// One conjunctive pruning: a choice of child per conjunction node.
struct Pruning {
  std::vector<std::pair<LeafRef, char>> choices;  // ('L' or 'R') per & node
};

// Enumerates all 2^k prunings; for each, reports the surviving leaf ids and
// the restriction of the linking to surviving leaves. The callback returns
// false to stop early. Throws PruningBudgetError over the cap.
void for_each_pruning(
    const SimpleNet& n,
    const std::function<bool(const Pruning&, const std::vector<int>&,
                             const std::vector<std::pair<int, int>>&)>& fn);

std::uint64_t pruning_count(const SimpleNet& n);

// Correct iff every conjunctive pruning keeps at least one link
// (t self-links count).
bool is_correct(const SimpleNet& n);

// Union of linkings over a shared sequent.
SimpleNet sum(const SimpleNet& f, const SimpleNet& g);

// Subset order on linkings over a shared sequent.
bool leq(const SimpleNet& f, const SimpleNet& g);

// Juxtaposition of two-formula nets (~A,B) and (~C,D) into (~C | ~A, B & D),
// resp. (~C & ~A, B | D); the linkings relocate leaf-wise.
SimpleNet juxtapose_and(const SimpleNet& f, const SimpleNet& g);
SimpleNet juxtapose_or(const SimpleNet& f, const SimpleNet& g);

}  // namespace boolcat

#endif
