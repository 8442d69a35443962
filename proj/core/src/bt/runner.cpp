#include "cyberdef/bt/runner.hpp"

namespace cyberdef::bt {

void TreeRunner::register_behavior(const std::string& id, Behavior fn) {
  if (!behaviors_.emplace(id, std::move(fn)).second) {
    throw BehaviorError("behavior id '" + id + "' already registered");
  }
}

Status TreeRunner::tick(const Node& root, Blackboard& bb) {
  trace_.clear();
  return tick_node(root, bb);
}

Status TreeRunner::tick_node(const Node& node, Blackboard& bb) {
  trace_.push_back(node.name);
  switch (node.kind) {
    case NodeKind::Sequence:
      for (const Node& child : node.children) {
        const Status s = tick_node(child, bb);
        if (s != Status::Success) return s;
      }
      return Status::Success;
    case NodeKind::Fallback:
      for (const Node& child : node.children) {
        const Status s = tick_node(child, bb);
        if (s != Status::Failure) return s;
      }
      return Status::Failure;
    case NodeKind::Condition:
    case NodeKind::Action: {
      auto it = behaviors_.find(node.behavior);
      if (it == behaviors_.end()) {
        throw BehaviorError("leaf '" + node.name + "' references unregistered behavior '" +
                            node.behavior + "'");
      }
      BlackboardView view(bb, node.name);
      return it->second(view);
    }
  }
  throw BehaviorError("corrupt node kind");
}

}  // namespace cyberdef::bt
