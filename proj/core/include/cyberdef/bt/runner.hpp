#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cyberdef/bt/blackboard.hpp"
#include "cyberdef/bt/node.hpp"

namespace cyberdef::bt {

using Behavior = std::function<Status(BlackboardView&)>;

/// Interprets trees against a registry of named behaviors.
///
/// Tick semantics are memoryless depth-first: Sequence ticks children left to
/// right and stops at the first non-Success child, returning its status;
/// Fallback stops at the first non-Failure child. A Running child therefore
/// halts its parent and propagates Running to the root; the next tick starts
/// over from the root. A tick never mutates tree structure.
class TreeRunner {
 public:
  /// Throws BehaviorError if the id is already registered.
  void register_behavior(const std::string& id, Behavior fn);
  bool has_behavior(const std::string& id) const { return behaviors_.count(id) != 0; }

  /// Throws BehaviorError on an unregistered leaf id.
  Status tick(const Node& root, Blackboard& bb);

  /// Node names in the order they were entered during the last tick.
  const std::vector<std::string>& last_trace() const { return trace_; }

 private:
  Status tick_node(const Node& node, Blackboard& bb);

  std::map<std::string, Behavior> behaviors_;
  std::vector<std::string> trace_;
};

}  // namespace cyberdef::bt
