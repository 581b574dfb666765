#include "boolcat/dot_export.hpp"

#include <sstream>

namespace boolcat {

namespace {

std::string node_id(int fi, const std::string& path) {
  return "n" + std::to_string(fi) + "_" + (path.empty() ? "r" : path);
}

std::string leaf_text(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return f.atom_name();
    case Formula::Kind::NegAtom:
      return "~" + f.atom_name();
    case Formula::Kind::Top:
      return "t";
    default:
      return "f";
  }
}

void emit_tree(std::ostringstream& out, const Formula& f, int fi, const std::string& path) {
  std::string id = node_id(fi, path);
  if (f.is_leaf()) {
    out << "    " << id << " [label=\"" << leaf_text(f) << "\", shape=plaintext];\n";
    return;
  }
  out << "    " << id << " [label=\"" << (f.kind() == Formula::Kind::And ? "&" : "|")
      << "\", shape=plaintext];\n";
  emit_tree(out, f.left(), fi, path + "L");
  emit_tree(out, f.right(), fi, path + "R");
  out << "    " << id << " -> " << node_id(fi, path + "L") << " [arrowhead=none];\n";
  out << "    " << id << " -> " << node_id(fi, path + "R") << " [arrowhead=none];\n";
}

void emit_sequent(std::ostringstream& out, const Sequent& s) {
  out << "  rankdir=TB;\n  node [fontname=\"monospace\"];\n";
  for (std::size_t fi = 0; fi < s.size(); ++fi) {
    out << "  subgraph cluster_f" << fi << " {\n    style=invis;\n";
    emit_tree(out, s[fi], static_cast<int>(fi), "");
    out << "  }\n";
  }
}

std::string leaf_dot_id(const LeafTable& t, int leaf) {
  const LeafRef& r = t.info(leaf).ref;
  return node_id(r.formula, r.path);
}

}  // namespace

std::string to_dot(const SimpleNet& n) {
  std::ostringstream out;
  out << "digraph net {\n";
  emit_sequent(out, n.sequent());
  for (auto [s, d] : n.links()) {
    out << "  " << leaf_dot_id(n.table(), s) << " -> " << leaf_dot_id(n.table(), d)
        << " [constraint=false, color=blue, splines=curved];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const ExtendedNet& n) {
  std::ostringstream out;
  out << "digraph net {\n";
  emit_sequent(out, n.sequent());
  for (const auto& [id, a] : n.anchors()) {
    out << "  k" << id << " [shape=point, width=0.1, xlabel=\"" << a.label << "\"];\n";
  }
  auto name = [&n](NodeId node) {
    if (is_anchor_node(node)) return "k" + std::to_string(anchor_of(node));
    return leaf_dot_id(n.table(), node);
  };
  for (const auto& [pair, c] : n.links()) {
    out << "  " << name(pair.first) << " -> " << name(pair.second)
        << " [constraint=false, color=blue";
    if (c > 1) out << ", label=\"" << c << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace boolcat
