#pragma once

#include <string>
#include <vector>

#include "cyberdef/bt/status.hpp"

namespace cyberdef::bt {

enum class NodeKind : std::uint8_t { Sequence, Fallback, Condition, Action };

/// One behavior-tree node, held by value. Condition/Action nodes are leaves
/// carrying the id of a registered behavior; Sequence/Fallback nodes carry at
/// least one child. Construction through the factory functions below rejects
/// malformed shapes, so a Node that exists is structurally valid.
struct Node {
  NodeKind kind = NodeKind::Sequence;
  std::string name;
  std::string behavior;  // leaves only
  std::vector<Node> children;

  bool is_leaf() const { return kind == NodeKind::Condition || kind == NodeKind::Action; }
  bool operator==(const Node&) const = default;
};

/// Throws DomainError on an empty child list.
Node sequence(std::string name, std::vector<Node> children);
Node fallback(std::string name, std::vector<Node> children);
Node condition(std::string name, std::string behavior_id);
Node action(std::string name, std::string behavior_id);

/// Leaf names in depth-first order.
std::vector<std::string> leaf_names(const Node& root);

std::string_view to_string(NodeKind kind);

}  // namespace cyberdef::bt
