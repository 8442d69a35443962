#include "cyberdef/bt/node.hpp"

#include "cyberdef/common/errors.hpp"

namespace cyberdef::bt {

Node sequence(std::string name, std::vector<Node> children) {
  if (children.empty()) {
    throw DomainError("sequence node '" + name + "' must have at least one child");
  }
  return Node{NodeKind::Sequence, std::move(name), {}, std::move(children)};
}

Node fallback(std::string name, std::vector<Node> children) {
  if (children.empty()) {
    throw DomainError("fallback node '" + name + "' must have at least one child");
  }
  return Node{NodeKind::Fallback, std::move(name), {}, std::move(children)};
}

Node condition(std::string name, std::string behavior_id) {
  return Node{NodeKind::Condition, std::move(name), std::move(behavior_id), {}};
}

Node action(std::string name, std::string behavior_id) {
  return Node{NodeKind::Action, std::move(name), std::move(behavior_id), {}};
}

static void collect_leaves(const Node& n, std::vector<std::string>& out) {
  if (n.is_leaf()) {
    out.push_back(n.name);
    return;
  }
  for (const Node& c : n.children) collect_leaves(c, out);
}

std::vector<std::string> leaf_names(const Node& root) {
  std::vector<std::string> out;
  collect_leaves(root, out);
  return out;
}

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Sequence: return "sequence";
    case NodeKind::Fallback: return "fallback";
    case NodeKind::Condition: return "condition";
    case NodeKind::Action: return "action";
  }
  return "?";
}

}  // namespace cyberdef::bt
