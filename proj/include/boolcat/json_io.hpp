#ifndef BOOLCAT_JSON_IO_HPP
#define BOOLCAT_JSON_IO_HPP

#include <string>

#include "boolcat/extended_net.hpp"
#include "boolcat/simple_net.hpp"

#include <json.hpp>

namespace boolcat {

using ordered_json = nlohmann::ordered_json;

ordered_json formula_to_json(const Formula& f);
Formula formula_from_json(const ordered_json& j);

ordered_json net_to_json(const SimpleNet& n);
ordered_json net_to_json(const ExtendedNet& n);

// A net file before validation. `extended` is set when the file carries
// anchors or multiplicities; `simple_links` is only meaningful otherwise.
struct ParsedNet {
  bool extended = false;
  Sequent sequent;
  std::vector<LinkRef> simple_links;
  ExtendedNet net;
};

// Throws BoolcatError / ParseError on malformed input or unresolvable leaf
// references; linking-condition violations are left to validate().
ParsedNet net_from_json(const ordered_json& j);
ParsedNet load_net_file(const std::string& path);

}  // namespace boolcat

#endif
