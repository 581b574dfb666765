#include "boolcat/simple_net.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>

namespace boolcat {

namespace {

std::atomic<int> g_pruning_cap{0};

int env_pruning_cap() {
  if (const char* v = std::getenv("BOOLCAT_PRUNING_CAP")) {
    int cap = std::atoi(v);
    if (cap > 0) return cap;
  }
  return 24;
}

}  // namespace

int pruning_cap() {
  int cap = g_pruning_cap.load(std::memory_order_relaxed);
  if (cap == 0) {
    cap = env_pruning_cap();
    g_pruning_cap.store(cap, std::memory_order_relaxed);
  }
  return cap;
}

void set_pruning_cap(int cap) { g_pruning_cap.store(cap, std::memory_order_relaxed); }

LeafTable::LeafTable(const Sequent& s) {
  entries_ = leaves(s);
  // Conjunction nodes in depth-first order, then per-leaf ancestor masks.
  for (std::size_t fi = 0; fi < s.size(); ++fi) {
    struct Frame {
      const Formula* f;
      std::string path;
    };
    std::vector<Frame> stack{{&s[fi], ""}};
    while (!stack.empty()) {
      Frame fr = std::move(stack.back());
      stack.pop_back();
      if (fr.f->is_leaf()) continue;
      if (fr.f->kind() == Formula::Kind::And)
        and_nodes_.push_back({static_cast<int>(fi), fr.path});
      stack.push_back({&fr.f->right(), fr.path + 'R'});
      stack.push_back({&fr.f->left(), fr.path + 'L'});
    }
  }
  std::sort(and_nodes_.begin(), and_nodes_.end());

  masks_.assign(entries_.size(), 0);
  reqs_.assign(entries_.size(), 0);
  if (and_nodes_.size() > 32) return;  // masks unusable; pruning ops will refuse anyway
  std::map<LeafRef, int> and_index;
  for (std::size_t k = 0; k < and_nodes_.size(); ++k) and_index[and_nodes_[k]] = static_cast<int>(k);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const LeafRef& ref = entries_[i].ref;
    for (std::size_t cut = 0; cut < ref.path.size(); ++cut) {
      auto it = and_index.find(LeafRef{ref.formula, ref.path.substr(0, cut)});
      if (it == and_index.end()) continue;
      masks_[i] |= 1u << it->second;
      if (ref.path[cut] == 'R') reqs_[i] |= 1u << it->second;
    }
  }
}

int LeafTable::id_of(const LeafRef& r) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].ref == r) return static_cast<int>(i);
  return -1;
}

std::vector<Violation> validate(const Sequent& s, const std::vector<LinkRef>& links) {
  std::vector<Violation> out;
  LeafTable table(s);

  auto describe = [&](const LinkRef& l) {
    return to_string(l.first) + " -> " + to_string(l.second);
  };

  std::vector<bool> self_linked(table.size(), false);
  for (const LinkRef& l : links) {
    int src = table.id_of(l.first);
    int dst = table.id_of(l.second);
    if (src < 0 || dst < 0) {
      out.push_back({ViolationKind::BadLeafRef,
                     "link endpoint is not a leaf of the sequent: " + describe(l)});
      continue;
    }
    const Formula& sl = table.label(src);
    const Formula& dl = table.label(dst);
    if (src == dst) {
      if (sl.kind() == Formula::Kind::Top)
        self_linked[src] = true;
      else
        out.push_back({ViolationKind::IllTypedLink,
                       "self-link on a leaf that is not t: " + describe(l)});
      continue;
    }
    bool ok = sl.kind() == Formula::Kind::NegAtom && dl.kind() == Formula::Kind::Atom &&
              sl.atom_name() == dl.atom_name();
    if (!ok)
      out.push_back({ViolationKind::IllTypedLink,
                     "ill-typed link (" + to_string(sl) + " -> " + to_string(dl) +
                         "): " + describe(l)});
  }
  for (int i = 0; i < table.size(); ++i) {
    if (table.label(i).kind() == Formula::Kind::Top && !self_linked[i])
      out.push_back({ViolationKind::TopWithoutSelfLink,
                     "t leaf without self-link: " + to_string(table.info(i).ref)});
  }
  return out;
}

SimpleNet::SimpleNet(Sequent s, const std::vector<LinkRef>& links) : sequent_(std::move(s)) {
  auto violations = validate(sequent_, links);
  if (!violations.empty()) {
    std::string msg = "invalid linking:";
    for (const auto& v : violations) msg += "\n  " + v.message;
    throw BoolcatError(msg);
  }
  table_ = LeafTable(sequent_);
  for (const LinkRef& l : links)
    links_.emplace_back(table_.id_of(l.first), table_.id_of(l.second));
  std::sort(links_.begin(), links_.end());
  links_.erase(std::unique(links_.begin(), links_.end()), links_.end());
}

SimpleNet::SimpleNet(Unchecked, Sequent s, std::vector<std::pair<int, int>> links)
    : sequent_(std::move(s)), table_(sequent_), links_(std::move(links)) {
  std::sort(links_.begin(), links_.end());
  links_.erase(std::unique(links_.begin(), links_.end()), links_.end());
}

std::vector<LinkRef> SimpleNet::link_refs() const {
  std::vector<LinkRef> out;
  out.reserve(links_.size());
  for (auto [s, d] : links_) out.emplace_back(table_.info(s).ref, table_.info(d).ref);
  return out;
}

bool SimpleNet::has_link(int src, int dst) const {
  return std::binary_search(links_.begin(), links_.end(), std::make_pair(src, dst));
}

bool SimpleNet::operator==(const SimpleNet& other) const {
  return sequent_ == other.sequent_ && links_ == other.links_;
}

namespace {

void check_budget(const LeafTable& t) {
  int cap = std::min(pruning_cap(), 32);
  if (t.and_count() > cap)
    throw PruningBudgetError("pruning budget exceeded: " + std::to_string(t.and_count()) +
                             " conjunction nodes, cap " + std::to_string(cap));
}

// Structural survivor computation: walk each formula, following the choice
// map at every conjunction.
void surviving_rec(const Formula& f, int fi, std::string& path,
                   const std::map<LeafRef, char>& choice, const LeafTable& t,
                   std::vector<int>& out) {
  if (f.is_leaf()) {
    out.push_back(t.id_of(LeafRef{fi, path}));
    return;
  }
  if (f.kind() == Formula::Kind::And) {
    char c = choice.at(LeafRef{fi, path});
    path.push_back(c);
    surviving_rec(c == 'L' ? f.left() : f.right(), fi, path, choice, t, out);
    path.pop_back();
    return;
  }
  path.push_back('L');
  surviving_rec(f.left(), fi, path, choice, t, out);
  path.back() = 'R';
  surviving_rec(f.right(), fi, path, choice, t, out);
  path.pop_back();
}

}  // namespace

void for_each_pruning(
    const SimpleNet& n,
    const std::function<bool(const Pruning&, const std::vector<int>&,
                             const std::vector<std::pair<int, int>>&)>& fn) {
  const LeafTable& t = n.table();
  check_budget(t);
  int k = t.and_count();
  for (std::uint64_t p = 0; p < (1ull << k); ++p) {
    Pruning pr;
    std::map<LeafRef, char> choice;
    for (int b = 0; b < k; ++b) {
      char c = (p >> b) & 1 ? 'R' : 'L';
      pr.choices.emplace_back(t.and_addr(b), c);
      choice[t.and_addr(b)] = c;
    }
    std::vector<int> survivors;
    std::string path;
    for (std::size_t fi = 0; fi < n.sequent().size(); ++fi)
      surviving_rec(n.sequent()[fi], static_cast<int>(fi), path, choice, t, survivors);
    std::vector<bool> alive(t.size(), false);
    for (int s : survivors) alive[s] = true;
    std::vector<std::pair<int, int>> restricted;
    for (auto [s, d] : n.links())
      if (alive[s] && alive[d]) restricted.emplace_back(s, d);
    if (!fn(pr, survivors, restricted)) return;
  }
}

std::uint64_t pruning_count(const SimpleNet& n) {
  check_budget(n.table());
  return 1ull << n.table().and_count();
}

bool is_correct(const SimpleNet& n) {
  const LeafTable& t = n.table();
  check_budget(t);
  // Combined survival condition per link; links whose endpoints sit on
  // opposite sides of a shared conjunction never survive.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> live;
  live.reserve(n.links().size());
  for (auto [s, d] : n.links()) {
    std::uint32_t shared = t.mask(s) & t.mask(d);
    if ((t.req(s) ^ t.req(d)) & shared) continue;
    live.emplace_back(t.mask(s) | t.mask(d), t.req(s) | t.req(d));
  }
  if (live.empty()) return false;
  std::uint64_t total = 1ull << t.and_count();
  for (std::uint64_t p = 0; p < total; ++p) {
    bool hit = false;
    for (auto [m, r] : live) {
      if (((static_cast<std::uint32_t>(p) ^ r) & m) == 0) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

SimpleNet sum(const SimpleNet& f, const SimpleNet& g) {
  if (f.sequent() != g.sequent()) throw BoolcatError("sum: sequents differ");
  std::vector<std::pair<int, int>> links = f.links();
  links.insert(links.end(), g.links().begin(), g.links().end());
  return SimpleNet(SimpleNet::Unchecked{}, f.sequent(), std::move(links));
}

bool leq(const SimpleNet& f, const SimpleNet& g) {
  if (f.sequent() != g.sequent()) throw BoolcatError("leq: sequents differ");
  return std::includes(g.links().begin(), g.links().end(), f.links().begin(), f.links().end());
}

namespace {

SimpleNet juxtapose(const SimpleNet& f, const SimpleNet& g, bool conjunctive) {
  if (f.sequent().size() != 2 || g.sequent().size() != 2)
    throw BoolcatError("juxtapose: both nets must have exactly two formulas");
  const Formula& fn = f.sequent()[0];
  const Formula& ft = f.sequent()[1];
  const Formula& gn = g.sequent()[0];
  const Formula& gt = g.sequent()[1];
  // (~A,B) x (~C,D) -> (~C op' ~A, B op D); sources swap sides under negation.
  Formula neg = conjunctive ? Formula::disj(gn, fn) : Formula::conj(gn, fn);
  Formula pos = conjunctive ? Formula::conj(ft, gt) : Formula::disj(ft, gt);
  Sequent seq({neg, pos});
  LeafTable table(seq);

  auto relocate = [&table](const LeafTable& src, bool from_f) {
    std::vector<int> map(src.size());
    for (int i = 0; i < src.size(); ++i) {
      const LeafRef& r = src.info(i).ref;
      LeafRef moved;
      if (r.formula == 0)
        moved = {0, (from_f ? "R" : "L") + r.path};
      else
        moved = {1, (from_f ? "L" : "R") + r.path};
      map[i] = table.id_of(moved);
    }
    return map;
  };

  std::vector<int> fmap = relocate(f.table(), true);
  std::vector<int> gmap = relocate(g.table(), false);
  std::vector<std::pair<int, int>> links;
  for (auto [s, d] : f.links()) links.emplace_back(fmap[s], fmap[d]);
  for (auto [s, d] : g.links()) links.emplace_back(gmap[s], gmap[d]);
  return SimpleNet(SimpleNet::Unchecked{}, std::move(seq), std::move(links));
}

}  // namespace

SimpleNet juxtapose_and(const SimpleNet& f, const SimpleNet& g) { return juxtapose(f, g, true); }
SimpleNet juxtapose_or(const SimpleNet& f, const SimpleNet& g) { return juxtapose(f, g, false); }

}  // namespace boolcat
