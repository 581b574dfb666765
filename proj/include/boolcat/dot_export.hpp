#ifndef BOOLCAT_DOT_EXPORT_HPP
#define BOOLCAT_DOT_EXPORT_HPP

#include <string>

#include "boolcat/extended_net.hpp"
#include "boolcat/simple_net.hpp"

namespace boolcat {

// Renders the sequent as a forest of formula trees with the linking drawn as
// curved arcs; anchors appear as bullet nodes between the trees.
std::string to_dot(const SimpleNet& n);
std::string to_dot(const ExtendedNet& n);

}  // namespace boolcat

#endif
