#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>

#include "cyberdef/common/errors.hpp"

namespace cyberdef::bt {

/// Packed bit-vector value (the 52-bit observation travels as one of these).
struct BitVec {
  std::uint64_t bits = 0;
  bool operator==(const BitVec&) const = default;
};

/// Discrete action id.
struct ActionId {
  int id = 0;
  bool operator==(const ActionId&) const = default;
};

/// Opaque shared handle for structured state the tree only passes around.
using Handle = std::shared_ptr<void>;

/// Closed set of value types a blackboard entry may hold.
using Value = std::variant<std::int64_t, bool, BitVec, ActionId, Handle>;

enum class Permission : std::uint8_t { Read, Write, ReadWrite };

constexpr bool can_read(Permission p) { return p != Permission::Write; }
constexpr bool can_write(Permission p) { return p != Permission::Read; }

/// Shared key-value store between the tree and the simulator harness. Every
/// access from a behavior goes through a node-scoped view and is checked
/// against the declared (node name, key) permission; an undeclared access is
/// a hard PermissionError, never silently allowed.
class Blackboard {
 public:
  void declare(const std::string& key, Value initial) { values_[key] = std::move(initial); }

  void grant(const std::string& node_name, const std::string& key, Permission p) {
    permissions_[{node_name, key}] = p;
  }

  /// Unchecked harness-side access (the simulator side of the interface).
  Value& at(const std::string& key);
  const Value& at(const std::string& key) const;
  bool has(const std::string& key) const { return values_.count(key) != 0; }

  bool allowed(const std::string& node_name, const std::string& key, bool write) const;

 private:
  friend class BlackboardView;
  std::map<std::string, Value> values_;
  std::map<std::pair<std::string, std::string>, Permission> permissions_;
};

/// Permission-scoped facade a behavior receives when ticked.
class BlackboardView {
 public:
  BlackboardView(Blackboard& bb, std::string node_name)
      : bb_(bb), node_(std::move(node_name)) {}

  template <typename T>
  const T& get(const std::string& key) const {
    check(key, /*write=*/false);
    const Value& v = bb_.at(key);
    const T* p = std::get_if<T>(&v);
    if (!p) throw DomainError("blackboard key '" + key + "' holds a different type");
    return *p;
  }

  template <typename T>
  void set(const std::string& key, T value) {
    check(key, /*write=*/true);
    bb_.at(key) = Value(std::move(value));
  }

  const std::string& node_name() const { return node_; }

 private:
  void check(const std::string& key, bool write) const;

  Blackboard& bb_;
  std::string node_;
};

}  // namespace cyberdef::bt
