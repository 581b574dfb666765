#include "boolcat/extended_net.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace boolcat {

ExtendedNet ExtendedNet::from_simple(const SimpleNet& n) {
  ExtendedNet out(n.sequent());
  for (auto [s, d] : n.links()) out.set_count(s, d, 1);
  return out;
}

int ExtendedNet::add_anchor(std::string label) {
  int id = next_anchor_++;
  anchors_[id] = Anchor{std::move(label)};
  return id;
}

void ExtendedNet::remove_anchor(int anchor_id) {
  anchors_.erase(anchor_id);
  NodeId n = anchor_node(anchor_id);
  for (auto it = links_.begin(); it != links_.end();) {
    if (it->first.first == n || it->first.second == n)
      it = links_.erase(it);
    else
      ++it;
  }
}

std::uint32_t ExtendedNet::count(NodeId a, NodeId b) const {
  auto it = links_.find({a, b});
  return it == links_.end() ? 0 : it->second;
}

void ExtendedNet::set_count(NodeId a, NodeId b, std::uint32_t c) {
  if (c == 0)
    links_.erase({a, b});
  else
    links_[{a, b}] = c;
}

void ExtendedNet::add_count(NodeId a, NodeId b, std::uint32_t c) {
  if (c == 0) return;
  links_[{a, b}] += c;
}

std::uint32_t ExtendedNet::in_degree(NodeId n) const {
  std::uint32_t total = 0;
  for (const auto& [pair, c] : links_)
    if (pair.second == n) total += c;
  return total;
}

std::uint32_t ExtendedNet::out_degree(NodeId n) const {
  std::uint32_t total = 0;
  for (const auto& [pair, c] : links_)
    if (pair.first == n) total += c;
  return total;
}

std::string ExtendedNet::node_name(NodeId n) const {
  if (is_anchor_node(n)) return "k" + std::to_string(anchor_of(n));
  return to_string(table_.info(n).ref);
}

namespace {

// Label of a node for typing purposes: leaves carry their leaf formula,
// anchors a positive atom.
enum class NodeLab { Atom, NegAtom, Top, Bot };

struct NodeType {
  NodeLab lab;
  std::string atom;
};

NodeType node_type(const ExtendedNet& n, NodeId id) {
  if (is_anchor_node(id)) return {NodeLab::Atom, n.anchors().at(anchor_of(id)).label};
  const Formula& f = n.table().label(id);
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return {NodeLab::Atom, f.atom_name()};
    case Formula::Kind::NegAtom:
      return {NodeLab::NegAtom, f.atom_name()};
    case Formula::Kind::Top:
      return {NodeLab::Top, ""};
    default:
      return {NodeLab::Bot, ""};
  }
}

}  // namespace

std::vector<Violation> validate_extended(const ExtendedNet& n) {
  std::vector<Violation> out;
  const LeafTable& t = n.table();

  for (const auto& [pair, c] : n.links()) {
    auto [i, j] = pair;
    if (c == 0) continue;
    NodeType ti = node_type(n, i);
    NodeType tj = node_type(n, j);
    if (i == j) {
      if (is_anchor_node(i)) {
        out.push_back({ViolationKind::AnchorSelfLink, "anchor self-link on " + n.node_name(i)});
      } else if (ti.lab != NodeLab::Top) {
        out.push_back(
            {ViolationKind::IllTypedLink, "self-link on a leaf that is not t: " + n.node_name(i)});
      } else if (c != 1) {
        out.push_back({ViolationKind::BadLinkCount,
                       "t self-link must have count 1: " + n.node_name(i)});
      }
      continue;
    }
    bool ok = false;
    if (!is_anchor_node(i) && ti.lab == NodeLab::NegAtom && tj.lab == NodeLab::Atom &&
        ti.atom == tj.atom)
      ok = true;
    if (is_anchor_node(i) && ti.lab == NodeLab::Atom && tj.lab == NodeLab::Atom &&
        ti.atom == tj.atom)
      ok = true;
    if (!ok)
      out.push_back({ViolationKind::IllTypedLink,
                     "ill-typed link " + n.node_name(i) + " -> " + n.node_name(j)});
  }

  for (int i = 0; i < t.size(); ++i) {
    if (t.label(i).kind() == Formula::Kind::Top && n.count(i, i) == 0)
      out.push_back({ViolationKind::TopWithoutSelfLink,
                     "t leaf without self-link: " + to_string(t.info(i).ref)});
  }

  for (const auto& [id, anchor] : n.anchors()) {
    NodeId node = anchor_node(id);
    if (n.in_degree(node) < 2)
      out.push_back(
          {ViolationKind::AnchorDegree, "anchor in-degree < 2: " + n.node_name(node)});
    if (n.out_degree(node) < 2)
      out.push_back(
          {ViolationKind::AnchorDegree, "anchor out-degree < 2: " + n.node_name(node)});
  }
  return out;
}

bool is_correct_extended(const ExtendedNet& n) {
  const LeafTable& t = n.table();
  int cap = std::min(pruning_cap(), 32);
  if (t.and_count() > cap)
    throw PruningBudgetError("pruning budget exceeded: " + std::to_string(t.and_count()) +
                             " conjunction nodes, cap " + std::to_string(cap));

  // Anchors survive every pruning, so leaf-to-leaf connectivity through them
  // is pruning-independent. Close the anchor digraph reflexively and
  // transitively, then collect all connected leaf pairs.
  std::vector<int> anchor_ids;
  for (const auto& [id, a] : n.anchors()) anchor_ids.push_back(id);
  int m = static_cast<int>(anchor_ids.size());
  std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) reach[i][i] = true;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (n.count(anchor_node(anchor_ids[i]), anchor_node(anchor_ids[j])) > 0)
        reach[i][j] = true;
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      if (reach[i][k])
        for (int j = 0; j < m; ++j)
          if (reach[k][j]) reach[i][j] = true;

  std::vector<std::pair<std::uint32_t, std::uint32_t>> live;  // (mask, req) per witness
  auto add_pair = [&](int i, int j) {
    std::uint32_t shared = t.mask(i) & t.mask(j);
    if ((t.req(i) ^ t.req(j)) & shared) return;
    live.emplace_back(t.mask(i) | t.mask(j), t.req(i) | t.req(j));
  };

  std::vector<std::vector<int>> into_anchor(m), out_of_anchor(m);
  for (const auto& [pair, c] : n.links()) {
    auto [i, j] = pair;
    if (!is_anchor_node(i) && !is_anchor_node(j)) {
      add_pair(i, j);  // covers t self-links as (i,i)
    } else if (!is_anchor_node(i) && is_anchor_node(j)) {
      int jj = static_cast<int>(std::lower_bound(anchor_ids.begin(), anchor_ids.end(),
                                                 anchor_of(j)) -
                                anchor_ids.begin());
      into_anchor[jj].push_back(i);
    } else if (is_anchor_node(i) && !is_anchor_node(j)) {
      int ii = static_cast<int>(std::lower_bound(anchor_ids.begin(), anchor_ids.end(),
                                                 anchor_of(i)) -
                                anchor_ids.begin());
      out_of_anchor[ii].push_back(j);
    }
  }
  for (int k1 = 0; k1 < m; ++k1)
    for (int k2 = 0; k2 < m; ++k2) {
      if (!reach[k1][k2]) continue;
      for (int i : into_anchor[k1])
        for (int j : out_of_anchor[k2]) add_pair(i, j);
    }

  std::sort(live.begin(), live.end());
  live.erase(std::unique(live.begin(), live.end()), live.end());
  if (live.empty()) return false;
  std::uint64_t total = 1ull << t.and_count();
  for (std::uint64_t p = 0; p < total; ++p) {
    bool hit = false;
    for (auto [mask, req] : live) {
      if (((static_cast<std::uint32_t>(p) ^ req) & mask) == 0) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

void normalize(ExtendedNet& n) {
  bool changed = true;
  while (changed) {
    changed = false;

    // Zero anchor self-links.
    std::vector<NodeId> selfs;
    for (const auto& [pair, c] : n.links())
      if (pair.first == pair.second && is_anchor_node(pair.first)) selfs.push_back(pair.first);
    for (NodeId s : selfs) {
      n.set_count(s, s, 0);
      changed = true;
    }

    // Drop anchors with no outgoing or no incoming links.
    std::vector<int> dead;
    for (const auto& [id, a] : n.anchors()) {
      NodeId node = anchor_node(id);
      if (n.out_degree(node) == 0 || n.in_degree(node) == 0) dead.push_back(id);
    }
    for (int id : dead) {
      n.remove_anchor(id);
      changed = true;
    }
    if (changed) continue;

    // Contract the lowest-numbered anchor with a single unit out-link.
    bool contracted = false;
    for (const auto& [id, a] : n.anchors()) {
      NodeId k = anchor_node(id);
      NodeId succ = 0;
      int pairs = 0;
      std::uint32_t total = 0;
      for (const auto& [pair, c] : n.links())
        if (pair.first == k) {
          ++pairs;
          total += c;
          succ = pair.second;
        }
      if (pairs == 1 && total == 1) {
        std::vector<std::pair<NodeId, std::uint32_t>> incoming;
        for (const auto& [pair, c] : n.links())
          if (pair.second == k && pair.first != k) incoming.emplace_back(pair.first, c);
        for (auto [l, c] : incoming) n.add_count(l, succ, c);
        n.remove_anchor(id);
        contracted = true;
        break;
      }
    }
    if (contracted) {
      changed = true;
      continue;
    }

    // Contract the lowest-numbered anchor with a single unit in-link.
    for (const auto& [id, a] : n.anchors()) {
      NodeId k = anchor_node(id);
      NodeId pred = 0;
      int pairs = 0;
      std::uint32_t total = 0;
      for (const auto& [pair, c] : n.links())
        if (pair.second == k) {
          ++pairs;
          total += c;
          pred = pair.first;
        }
      if (pairs == 1 && total == 1) {
        std::vector<std::pair<NodeId, std::uint32_t>> outgoing;
        for (const auto& [pair, c] : n.links())
          if (pair.first == k && pair.second != k) outgoing.emplace_back(pair.second, c);
        for (auto [l, c] : outgoing) n.add_count(pred, l, c);
        n.remove_anchor(id);
        contracted = true;
        break;
      }
    }
    if (contracted) changed = true;
  }

  // Reset t self-links.
  const LeafTable& t = n.table();
  for (int i = 0; i < t.size(); ++i)
    if (t.label(i).kind() == Formula::Kind::Top) n.set_count(i, i, 1);
}

ExtendedNet compose_extended(const ExtendedNet& g, const ExtendedNet& f) {
  if (f.sequent().size() != 2 || g.sequent().size() != 2)
    throw BoolcatError("compose: both nets must have exactly two formulas");
  const Formula& cut = f.sequent()[1];
  if (g.sequent()[0] != negate(cut))
    throw BoolcatError("compose: type mismatch at the cut (" + to_string(cut) + " vs " +
                       to_string(negate(g.sequent()[0])) + ")");

  Sequent seq({f.sequent()[0], g.sequent()[1]});
  ExtendedNet out(seq);

  // Node maps old -> new. Cut-leaf pairs (path p in B, mirror(p) in ~B)
  // merge to one anchor each; unit pairs get a placeholder the cleanup pass
  // deletes.
  const LeafTable& ft = f.table();
  const LeafTable& gt = g.table();
  std::vector<NodeId> fmap(ft.size()), gmap(gt.size());
  std::map<std::string, NodeId> cut_nodes;  // path in the cut formula -> node

  for (int i = 0; i < ft.size(); ++i) {
    const LeafRef& r = ft.info(i).ref;
    if (r.formula == 0) {
      fmap[i] = out.table().id_of(LeafRef{0, r.path});
    } else {
      const Formula& lab = ft.label(i);
      int a = out.add_anchor(lab.is_atomic() ? lab.atom_name() : std::string());
      NodeId node = anchor_node(a);
      cut_nodes[r.path] = node;
      fmap[i] = node;
    }
  }
  for (int i = 0; i < gt.size(); ++i) {
    const LeafRef& r = gt.info(i).ref;
    if (r.formula == 0)
      gmap[i] = cut_nodes.at(mirror_path(r.path));
    else
      gmap[i] = out.table().id_of(LeafRef{1, r.path});
  }

  std::map<int, int> f_anchor_map, g_anchor_map;
  for (const auto& [id, a] : f.anchors()) f_anchor_map[id] = out.add_anchor(a.label);
  for (const auto& [id, a] : g.anchors()) g_anchor_map[id] = out.add_anchor(a.label);

  auto move_node = [](const std::vector<NodeId>& leaf_map, const std::map<int, int>& anchor_map,
                      NodeId n) {
    return is_anchor_node(n) ? anchor_node(anchor_map.at(anchor_of(n))) : leaf_map[n];
  };
  for (const auto& [pair, c] : f.links())
    out.add_count(move_node(fmap, f_anchor_map, pair.first),
                  move_node(fmap, f_anchor_map, pair.second), c);
  for (const auto& [pair, c] : g.links())
    out.add_count(move_node(gmap, g_anchor_map, pair.first),
                  move_node(gmap, g_anchor_map, pair.second), c);

  normalize(out);
  return out;
}

ExtendedNet eliminate_anchor(const ExtendedNet& n, int anchor_id) {
  if (!n.has_anchor(anchor_id)) throw BoolcatError("unknown anchor");
  ExtendedNet out = n;
  NodeId k = anchor_node(anchor_id);
  std::vector<std::pair<NodeId, std::uint32_t>> ins, outs;
  for (const auto& [pair, c] : n.links()) {
    if (pair.second == k && pair.first != k) ins.emplace_back(pair.first, c);
    if (pair.first == k && pair.second != k) outs.emplace_back(pair.second, c);
  }
  out.remove_anchor(anchor_id);
  for (auto [i, ci] : ins)
    for (auto [j, cj] : outs) out.add_count(i, j, ci * cj);
  normalize(out);
  return out;
}

namespace {

// Anchor matching: leaf-to-leaf counts must agree outright; anchors must
// admit a label-preserving bijection matching every count.
bool match_anchors(const ExtendedNet& f, const ExtendedNet& g, std::vector<int>& f_ids,
                   std::vector<int>& g_ids, std::vector<int>& assign, std::size_t pos,
                   std::vector<bool>& used) {
  if (pos == f_ids.size()) return true;
  NodeId fa = anchor_node(f_ids[pos]);
  for (std::size_t j = 0; j < g_ids.size(); ++j) {
    if (used[j]) continue;
    if (f.anchors().at(f_ids[pos]).label != g.anchors().at(g_ids[j]).label) continue;
    NodeId ga = anchor_node(g_ids[j]);
    // Counts against leaves and already-assigned anchors must agree.
    bool ok = true;
    int leaf_count = f.table().size();
    for (int l = 0; l < leaf_count && ok; ++l) {
      if (f.count(l, fa) != g.count(l, ga)) ok = false;
      if (f.count(fa, l) != g.count(ga, l)) ok = false;
    }
    for (std::size_t p = 0; p <= pos && ok; ++p) {
      NodeId fb = anchor_node(f_ids[p]);
      NodeId gb = p == pos ? ga : anchor_node(g_ids[assign[p]]);
      if (f.count(fa, fb) != g.count(ga, gb)) ok = false;
      if (f.count(fb, fa) != g.count(gb, ga)) ok = false;
    }
    if (!ok) continue;
    used[j] = true;
    assign[pos] = static_cast<int>(j);
    if (match_anchors(f, g, f_ids, g_ids, assign, pos + 1, used)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool equal_extended(const ExtendedNet& f, const ExtendedNet& g) {
  if (f.sequent() != g.sequent()) return false;
  if (f.anchors().size() != g.anchors().size()) return false;
  int leaf_count = f.table().size();
  for (int i = 0; i < leaf_count; ++i)
    for (int j = 0; j < leaf_count; ++j)
      if (f.count(i, j) != g.count(i, j)) return false;
  if (f.anchors().empty()) return true;
  std::vector<int> f_ids, g_ids;
  for (const auto& [id, a] : f.anchors()) f_ids.push_back(id);
  for (const auto& [id, a] : g.anchors()) g_ids.push_back(id);
  std::vector<int> assign(f_ids.size(), -1);
  std::vector<bool> used(g_ids.size(), false);
  return match_anchors(f, g, f_ids, g_ids, assign, 0, used);
}

bool preceq_extended(const ExtendedNet& f, const ExtendedNet& g, int anchor_bound) {
  if (static_cast<int>(f.anchors().size()) > anchor_bound)
    throw BoolcatError("preceq: anchor bound exceeded");
  std::deque<ExtendedNet> frontier{f};
  std::vector<ExtendedNet> seen{f};
  auto known = [&seen](const ExtendedNet& n) {
    for (const auto& s : seen)
      if (equal_extended(s, n)) return true;
    return false;
  };
  while (!frontier.empty()) {
    ExtendedNet cur = std::move(frontier.front());
    frontier.pop_front();
    if (equal_extended(cur, g)) return true;
    for (const auto& [id, a] : cur.anchors()) {
      ExtendedNet next = eliminate_anchor(cur, id);
      if (!known(next)) {
        seen.push_back(next);
        frontier.push_back(next);
      }
    }
  }
  return false;
}

std::vector<ExtendedNet> all_elimination_results(const ExtendedNet& n, int anchor_bound) {
  if (static_cast<int>(n.anchors().size()) > anchor_bound)
    throw BoolcatError("anchor bound exceeded");
  std::vector<ExtendedNet> results;
  auto add_result = [&results](const ExtendedNet& r) {
    for (const auto& s : results)
      if (equal_extended(s, r)) return;
    results.push_back(r);
  };
  std::deque<ExtendedNet> frontier{n};
  std::vector<ExtendedNet> seen{n};
  auto known = [&seen](const ExtendedNet& x) {
    for (const auto& s : seen)
      if (equal_extended(s, x)) return true;
    return false;
  };
  while (!frontier.empty()) {
    ExtendedNet cur = std::move(frontier.front());
    frontier.pop_front();
    if (cur.anchors().empty()) {
      add_result(cur);
      continue;
    }
    for (const auto& [id, a] : cur.anchors()) {
      ExtendedNet next = eliminate_anchor(cur, id);
      if (!known(next)) {
        seen.push_back(next);
        frontier.push_back(next);
      }
    }
  }
  return results;
}

ExtendedNet relocate_extended(const ExtendedNet& n, Sequent new_sequent,
                              const std::vector<LeafRef>& map) {
  ExtendedNet out(std::move(new_sequent));
  std::vector<NodeId> node_map(n.table().size());
  for (int i = 0; i < n.table().size(); ++i) {
    int id = out.table().id_of(map[i]);
    if (id < 0) throw BoolcatError("relocation target is not a leaf: " + to_string(map[i]));
    node_map[i] = id;
  }
  std::map<int, int> anchor_map;
  for (const auto& [id, a] : n.anchors()) anchor_map[id] = out.add_anchor(a.label);
  auto move_node = [&](NodeId x) {
    return is_anchor_node(x) ? anchor_node(anchor_map.at(anchor_of(x))) : node_map[x];
  };
  for (const auto& [pair, c] : n.links())
    out.add_count(move_node(pair.first), move_node(pair.second), c);
  return out;
}

namespace {

ExtendedNet juxtapose_extended(const ExtendedNet& f, const ExtendedNet& g, bool conjunctive) {
  if (f.sequent().size() != 2 || g.sequent().size() != 2)
    throw BoolcatError("juxtapose: both nets must have exactly two formulas");
  const Formula& fn = f.sequent()[0];
  const Formula& ft = f.sequent()[1];
  const Formula& gn = g.sequent()[0];
  const Formula& gt = g.sequent()[1];
  Formula neg = conjunctive ? Formula::disj(gn, fn) : Formula::conj(gn, fn);
  Formula pos = conjunctive ? Formula::conj(ft, gt) : Formula::disj(ft, gt);
  Sequent seq({neg, pos});
  ExtendedNet out(seq);

  auto relocate_into = [&out](const ExtendedNet& src, bool from_f,
                              std::vector<NodeId>& leaf_map, std::map<int, int>& anchor_map) {
    const LeafTable& t = src.table();
    leaf_map.resize(t.size());
    for (int i = 0; i < t.size(); ++i) {
      const LeafRef& r = t.info(i).ref;
      LeafRef moved = r.formula == 0 ? LeafRef{0, (from_f ? "R" : "L") + r.path}
                                     : LeafRef{1, (from_f ? "L" : "R") + r.path};
      leaf_map[i] = out.table().id_of(moved);
    }
    for (const auto& [id, a] : src.anchors()) anchor_map[id] = out.add_anchor(a.label);
  };

  std::vector<NodeId> fmap, gmap;
  std::map<int, int> fam, gam;
  relocate_into(f, true, fmap, fam);
  relocate_into(g, false, gmap, gam);
  auto move_node = [](const std::vector<NodeId>& lm, const std::map<int, int>& am, NodeId x) {
    return is_anchor_node(x) ? anchor_node(am.at(anchor_of(x))) : lm[x];
  };
  for (const auto& [pair, c] : f.links())
    out.add_count(move_node(fmap, fam, pair.first), move_node(fmap, fam, pair.second), c);
  for (const auto& [pair, c] : g.links())
    out.add_count(move_node(gmap, gam, pair.first), move_node(gmap, gam, pair.second), c);
  return out;
}

}  // namespace

ExtendedNet juxtapose_and_extended(const ExtendedNet& f, const ExtendedNet& g) {
  return juxtapose_extended(f, g, true);
}

ExtendedNet juxtapose_or_extended(const ExtendedNet& f, const ExtendedNet& g) {
  return juxtapose_extended(f, g, false);
}

}  // namespace boolcat
