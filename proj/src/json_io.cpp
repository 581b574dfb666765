#include "boolcat/json_io.hpp"

#include <fstream>
#include <sstream>

namespace boolcat {

ordered_json formula_to_json(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return f.atom_name();
    case Formula::Kind::NegAtom:
      return "~" + f.atom_name();
    case Formula::Kind::Top:
      return "t";
    case Formula::Kind::Bot:
      return "f";
    case Formula::Kind::And:
      return ordered_json::array({"and", formula_to_json(f.left()), formula_to_json(f.right())});
    case Formula::Kind::Or:
      return ordered_json::array({"or", formula_to_json(f.left()), formula_to_json(f.right())});
  }
  throw BoolcatError("unreachable");
}

Formula formula_from_json(const ordered_json& j) {
  if (j.is_string()) return parse_formula(j.get<std::string>());
  if (j.is_array() && j.size() == 3 && j[0].is_string()) {
    std::string op = j[0].get<std::string>();
    if (op == "and") return Formula::conj(formula_from_json(j[1]), formula_from_json(j[2]));
    if (op == "or") return Formula::disj(formula_from_json(j[1]), formula_from_json(j[2]));
  }
  throw BoolcatError("malformed formula JSON: " + j.dump());
}

namespace {

ordered_json leaf_ref_to_json(const LeafRef& r) {
  return ordered_json{{"i", r.formula}, {"path", r.path}};
}

ordered_json sequent_to_json(const Sequent& s) {
  ordered_json arr = ordered_json::array();
  for (const Formula& f : s.formulas()) arr.push_back(formula_to_json(f));
  return arr;
}

Sequent sequent_from_json(const ordered_json& j) {
  if (!j.is_array() || j.empty()) throw BoolcatError("sequent must be a nonempty array");
  std::vector<Formula> fs;
  for (const auto& item : j) fs.push_back(formula_from_json(item));
  return Sequent(std::move(fs));
}

LeafRef leaf_ref_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("i") || !j.contains("path"))
    throw BoolcatError("link endpoint must be {\"i\":...,\"path\":...}: " + j.dump());
  return LeafRef{j["i"].get<int>(), j["path"].get<std::string>()};
}

}  // namespace

ordered_json net_to_json(const SimpleNet& n) {
  ordered_json out;
  out["sequent"] = sequent_to_json(n.sequent());
  ordered_json links = ordered_json::array();
  for (const auto& [src, dst] : n.link_refs())
    links.push_back(ordered_json{{"src", leaf_ref_to_json(src)}, {"dst", leaf_ref_to_json(dst)}});
  out["links"] = links;
  return out;
}

ordered_json net_to_json(const ExtendedNet& n) {
  ordered_json out;
  out["sequent"] = sequent_to_json(n.sequent());
  ordered_json anchors = ordered_json::array();
  for (const auto& [id, a] : n.anchors())
    anchors.push_back(ordered_json{{"id", "k" + std::to_string(id)}, {"label", a.label}});
  out["anchors"] = anchors;
  ordered_json links = ordered_json::array();
  auto endpoint = [&n](NodeId node) -> ordered_json {
    if (is_anchor_node(node))
      return ordered_json{{"anchor", "k" + std::to_string(anchor_of(node))}};
    return leaf_ref_to_json(n.table().info(node).ref);
  };
  for (const auto& [pair, c] : n.links())
    links.push_back(ordered_json{
        {"src", endpoint(pair.first)}, {"dst", endpoint(pair.second)}, {"count", c}});
  out["links"] = links;
  return out;
}

ParsedNet net_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("sequent")) throw BoolcatError("net JSON needs a sequent");
  ParsedNet out;
  out.sequent = sequent_from_json(j["sequent"]);
  out.net = ExtendedNet(out.sequent);
  LeafTable table(out.sequent);

  std::map<std::string, int> anchor_ids;
  if (j.contains("anchors")) {
    out.extended = true;
    for (const auto& a : j["anchors"]) {
      if (!a.contains("id") || !a.contains("label"))
        throw BoolcatError("anchor needs id and label: " + a.dump());
      anchor_ids[a["id"].get<std::string>()] = out.net.add_anchor(a["label"].get<std::string>());
    }
  }

  auto endpoint = [&](const ordered_json& e) -> NodeId {
    if (e.is_object() && e.contains("anchor")) {
      auto it = anchor_ids.find(e["anchor"].get<std::string>());
      if (it == anchor_ids.end())
        throw BoolcatError("link references unknown anchor " + e["anchor"].dump());
      return anchor_node(it->second);
    }
    LeafRef r = leaf_ref_from_json(e);
    int id = table.id_of(r);
    if (id < 0) throw BoolcatError("link endpoint is not a leaf: " + to_string(r));
    return id;
  };

  if (j.contains("links")) {
    for (const auto& l : j["links"]) {
      if (!l.is_object() || !l.contains("src") || !l.contains("dst"))
        throw BoolcatError("link needs src and dst: " + l.dump());
      std::uint32_t count = 1;
      if (l.contains("count")) {
        count = l["count"].get<std::uint32_t>();
        if (count != 1) out.extended = true;
      }
      NodeId s = endpoint(l["src"]);
      NodeId d = endpoint(l["dst"]);
      out.net.add_count(s, d, count);
      if (!is_anchor_node(s) && !is_anchor_node(d))
        out.simple_links.emplace_back(table.info(s).ref, table.info(d).ref);
    }
  }
  return out;
}

ParsedNet load_net_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BoolcatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  ordered_json j;
  try {
    j = ordered_json::parse(ss.str());
  } catch (const std::exception& e) {
    throw BoolcatError("malformed JSON in " + path + ": " + e.what());
  }
  return net_from_json(j);
}

}  // namespace boolcat
