#include "cyberdef/bt/blackboard.hpp"

namespace cyberdef::bt {

Value& Blackboard::at(const std::string& key) {
  auto it = values_.find(key);
  if (it == values_.end()) throw DomainError("undeclared blackboard key '" + key + "'");
  return it->second;
}

const Value& Blackboard::at(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw DomainError("undeclared blackboard key '" + key + "'");
  return it->second;
}

bool Blackboard::allowed(const std::string& node_name, const std::string& key,
                         bool write) const {
  auto it = permissions_.find({node_name, key});
  if (it == permissions_.end()) return false;
  return write ? can_write(it->second) : can_read(it->second);
}

void BlackboardView::check(const std::string& key, bool write) const {
  if (!bb_.allowed(node_, key, write)) {
    throw PermissionError("node '" + node_ + "' has no " +
                          (write ? std::string("write") : std::string("read")) +
                          " permission on key '" + key + "'");
  }
}

}  // namespace cyberdef::bt
