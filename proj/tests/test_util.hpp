#ifndef BOOLCAT_TEST_UTIL_HPP
#define BOOLCAT_TEST_UTIL_HPP

#include <string>
#include <vector>

#include "boolcat/extended_net.hpp"
#include "boolcat/morphism.hpp"
#include "boolcat/simple_net.hpp"

namespace boolcat::testutil {

inline LeafRef ref(int fi, const char* path) { return LeafRef{fi, path}; }

inline Sequent seq_of(const std::vector<std::string>& texts) {
  std::vector<Formula> fs;
  for (const auto& t : texts) fs.push_back(parse_formula(t));
  return Sequent(std::move(fs));
}

// Worked example 1: ~b&a, ~a&~b, b&a, ~a&b with six links.
inline Sequent exa1_sequent() { return seq_of({"~b & a", "~a & ~b", "b & a", "~a & b"}); }

inline std::vector<LinkRef> exa1_links() {
  return {
      {ref(0, "L"), ref(3, "R")}, {ref(0, "L"), ref(2, "L")}, {ref(1, "R"), ref(3, "R")},
      {ref(1, "L"), ref(0, "R")}, {ref(1, "R"), ref(2, "L")}, {ref(3, "L"), ref(2, "R")},
  };
}

inline SimpleNet exa1() { return SimpleNet(exa1_sequent(), exa1_links()); }

// Worked example 2: ~b|a, ((~a&t)&~a)&b, b|((a&c)|f), t|((~c&f)&b).
inline Sequent exa2_sequent() {
  return seq_of({"~b | a", "((~a & t) & ~a) & b", "b | ((a & c) | f)", "t | ((~c & f) & b)"});
}

inline std::vector<LinkRef> exa2_links() {
  return {
      {ref(1, "LLR"), ref(1, "LLR")},  // t self
      {ref(3, "L"), ref(3, "L")},      // t self
      {ref(1, "LLL"), ref(0, "R")},    // ~a -> a
      {ref(1, "LR"), ref(0, "R")},     // ~a -> a
      {ref(3, "RLL"), ref(2, "RLR")},  // ~c -> c
      {ref(0, "L"), ref(1, "R")},      // ~b -> b (fan-out 3)
      {ref(0, "L"), ref(2, "L")},
      {ref(0, "L"), ref(3, "RR")},
  };
}

inline SimpleNet exa2() { return SimpleNet(exa2_sequent(), exa2_links()); }

// exa1 regrouped as the arrow ((~b&a)|(~a&~b))|(b&a) side to ~a&b; the
// grouping only adds inner nodes, leaf for leaf.
inline Hom exa1_as_arrow() {
  Formula neg = parse_formula("((~b & a) | (~a & ~b)) | (b & a)");
  Formula tgt = parse_formula("~a & b");
  Sequent seq({neg, tgt});
  auto move = [](const LeafRef& r) {
    switch (r.formula) {
      case 0:
        return LeafRef{0, "LL" + r.path};
      case 1:
        return LeafRef{0, "LR" + r.path};
      case 2:
        return LeafRef{0, "R" + r.path};
      default:
        return LeafRef{1, r.path};
    }
  };
  std::vector<LinkRef> links;
  for (const auto& [s, d] : exa1_links()) links.push_back({move(s), move(d)});
  return Hom{negate(neg), tgt, SimpleNet(std::move(seq), links)};
}

// exa2 regrouped as the arrow from ~a&b with the last three formulas joined.
inline Hom exa2_as_arrow() {
  Formula neg = parse_formula("~b | a");
  Formula tgt =
      parse_formula("((((~a & t) & ~a) & b) | (b | ((a & c) | f))) | (t | ((~c & f) & b))");
  Sequent seq({neg, tgt});
  auto move = [](const LeafRef& r) {
    switch (r.formula) {
      case 0:
        return r;
      case 1:
        return LeafRef{1, "LL" + r.path};
      case 2:
        return LeafRef{1, "LR" + r.path};
      default:
        return LeafRef{1, "R" + r.path};
    }
  };
  std::vector<LinkRef> links;
  for (const auto& [s, d] : exa2_links()) links.push_back({move(s), move(d)});
  return Hom{negate(neg), tgt, SimpleNet(std::move(seq), links)};
}

// The 14 links of the displayed composition of exa1 and exa2, in the grouped
// arrow housing (see exa1_as_arrow / exa2_as_arrow).
inline std::vector<LinkRef> exa1_exa2_expected_links() {
  return {
      {ref(1, "LLLLR"), ref(1, "LLLLR")},  // t self
      {ref(1, "RL"), ref(1, "RL")},        // t self
      {ref(1, "LLLLL"), ref(0, "RR")},     // ~a -> a
      {ref(1, "LLLR"), ref(0, "RR")},      // ~a -> a
      {ref(1, "RRLL"), ref(1, "LRRLR")},   // ~c -> c
      {ref(0, "LRL"), ref(0, "LLR")},      // ~a -> a
      {ref(0, "LLL"), ref(0, "RL")},       // ~b -> b
      {ref(0, "LLL"), ref(1, "LLR")},
      {ref(0, "LLL"), ref(1, "LRL")},
      {ref(0, "LLL"), ref(1, "RRR")},
      {ref(0, "LRR"), ref(0, "RL")},
      {ref(0, "LRR"), ref(1, "LLR")},
      {ref(0, "LRR"), ref(1, "LRL")},
      {ref(0, "LRR"), ref(1, "RRR")},
  };
}

// The anchored form of exa1: the four ~b/b links routed through one b-anchor.
inline HomX exa1_anchored_arrow() {
  Hom plain = exa1_as_arrow();
  ExtendedNet net(plain.net.sequent());
  const LeafTable& t = net.table();
  int k = net.add_anchor("b");
  NodeId kn = anchor_node(k);
  net.set_count(t.id_of(ref(0, "LLL")), kn, 1);  // ~b of formula block 0
  net.set_count(t.id_of(ref(0, "LRR")), kn, 1);  // ~b of block 1
  net.set_count(kn, t.id_of(ref(0, "RL")), 1);   // b of block 2
  net.set_count(kn, t.id_of(ref(1, "R")), 1);    // b of ~a&b
  net.set_count(t.id_of(ref(0, "LRL")), t.id_of(ref(0, "LLR")), 1);  // ~a -> a
  net.set_count(t.id_of(ref(1, "L")), t.id_of(ref(0, "RR")), 1);     // ~a -> a
  return HomX{plain.src, plain.tgt, std::move(net)};
}

}  // namespace boolcat::testutil

#endif
