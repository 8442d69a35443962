#pragma once

#include <string>

#include "cyberdef/bt/node.hpp"

namespace cyberdef::bt {

/// Line-oriented tree description. One node per line, two spaces of indent
/// per depth level:
///
///   fallback Root
///     sequence Guarded
///       condition Ready? ready_check
///       action Fire! fire
///
/// Control lines are "<kind> <name>", leaf lines "<kind> <name> <behavior>".
/// Names and behavior ids must be whitespace-free; serialize_tree enforces
/// this so parse(serialize(t)) == t for every valid tree.
std::string serialize_tree(const Node& root);

/// Throws ParseError on malformed input (bad kind, bad indent, empty control
/// nodes, trailing tokens).
Node parse_tree(const std::string& text);

}  // namespace cyberdef::bt
