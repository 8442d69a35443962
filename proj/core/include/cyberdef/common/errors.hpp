#pragma once

#include <stdexcept>
#include <string>

namespace cyberdef {

/// Invalid inputs to the simulator or agent (bad action index, bad enum code).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed config file or contradictory experiment settings. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A model was queried under a policy tag it was not trained for. CLI exit code 3.
class ModelMismatchError : public std::runtime_error {
 public:
  explicit ModelMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/// Unparseable or truncated dataset/model/tree file.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Blackboard access outside a node's declared permissions.
class PermissionError : public std::runtime_error {
 public:
  explicit PermissionError(const std::string& what) : std::runtime_error(what) {}
};

/// Behavior registry misuse: duplicate id or tick of an unregistered id.
class BehaviorError : public std::runtime_error {
 public:
  explicit BehaviorError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cyberdef
