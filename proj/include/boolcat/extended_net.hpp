#ifndef BOOLCAT_EXTENDED_NET_HPP
#define BOOLCAT_EXTENDED_NET_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "boolcat/simple_net.hpp"

namespace boolcat {

// Node of an extended net: leaf id i encodes as i >= 0, anchor id k as -(k+1).
using NodeId = int;

inline NodeId leaf_node(int leaf_id) { return leaf_id; }
inline NodeId anchor_node(int anchor_id) { return -(anchor_id + 1); }
inline bool is_anchor_node(NodeId n) { return n < 0; }
inline int anchor_of(NodeId n) { return -n - 1; }

class ExtendedNet {
 public:
  struct Anchor {
    std::string label;  // atom name
  };

  ExtendedNet() = default;
  explicit ExtendedNet(Sequent s) : sequent_(std::move(s)), table_(sequent_) {}

  static ExtendedNet from_simple(const SimpleNet& n);

  const Sequent& sequent() const { return sequent_; }
  const LeafTable& table() const { return table_; }
  const std::map<int, Anchor>& anchors() const { return anchors_; }
  const std::map<std::pair<NodeId, NodeId>, std::uint32_t>& links() const { return links_; }

  int add_anchor(std::string label);
  void remove_anchor(int anchor_id);  // drops incident links too
  bool has_anchor(int anchor_id) const { return anchors_.count(anchor_id) != 0; }

  std::uint32_t count(NodeId a, NodeId b) const;
  void set_count(NodeId a, NodeId b, std::uint32_t c);
  void add_count(NodeId a, NodeId b, std::uint32_t c);

  std::uint32_t in_degree(NodeId n) const;   // total incoming multiplicity
  std::uint32_t out_degree(NodeId n) const;  // total outgoing multiplicity

  std::string node_name(NodeId n) const;

 private:
  Sequent sequent_;
  LeafTable table_;
  std::map<int, Anchor> anchors_;
  int next_anchor_ = 0;
  std::map<std::pair<NodeId, NodeId>, std::uint32_t> links_;  // positive counts only
};

// Extended-prenet conditions: t self-links exactly 1, anchors with >= 2
// multiplicity in and out, every link typed (t self / ~a leaf -> a node /
// a anchor -> a node), no anchor self-links.
std::vector<Violation> validate_extended(const ExtendedNet& n);

// Correct iff every conjunctive pruning of the sequent (anchors always
// survive) keeps a surviving t self-link or a directed path from a surviving
// leaf through anchors to a surviving leaf.
bool is_correct_extended(const ExtendedNet& n);

// The anchor cleanup pass of cut elimination: repeatedly zero anchor
// self-links, delete anchors without ins or outs, and contract anchors with
// a single unit in- or out-link, until no rule applies.
void normalize(ExtendedNet& n);

// Composition by cut elimination of (~A,B) with (~B,C): cut-leaf pairs merge
// into anchors (unit pairs into short-lived placeholder nodes), then the
// cleanup pass runs. Throws on a sequent mismatch at the cut.
ExtendedNet compose_extended(const ExtendedNet& g, const ExtendedNet& f);

// Path substitution for one anchor: P'(i,j) = P(i,j) + P(i,k)*P(k,j),
// followed by the cleanup pass.
ExtendedNet eliminate_anchor(const ExtendedNet& n, int anchor_id);

// Equality up to a label- and count-preserving anchor bijection.
bool equal_extended(const ExtendedNet& f, const ExtendedNet& g);

// True iff some sequence of single-anchor eliminations turns f into g
// (including the empty sequence). Bounded breadth-first search.
bool preceq_extended(const ExtendedNet& f, const ExtendedNet& g, int anchor_bound = 8);

// All distinct normal forms reachable by eliminating anchors until none are
// left, one per elimination order (deduplicated with equal_extended).
std::vector<ExtendedNet> all_elimination_results(const ExtendedNet& n, int anchor_bound = 8);

ExtendedNet juxtapose_and_extended(const ExtendedNet& f, const ExtendedNet& g);
ExtendedNet juxtapose_or_extended(const ExtendedNet& f, const ExtendedNet& g);

// Rehouses every leaf through `map` (old leaf id -> new LeafRef) onto a new
// sequent; anchors and counts carry over.
ExtendedNet relocate_extended(const ExtendedNet& n, Sequent new_sequent,
                              const std::vector<LeafRef>& map);

}  // namespace boolcat

#endif
