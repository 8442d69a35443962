#include "cyberdef/bt/text_format.hpp"

#include <sstream>
#include <vector>

#include "cyberdef/common/errors.hpp"

namespace cyberdef::bt {
namespace {

void check_token(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_of(" \t\n") != std::string::npos) {
    throw DomainError(std::string("tree ") + what + " must be a non-empty single token: '" +
                      s + "'");
  }
}

void write_node(const Node& n, int depth, std::ostringstream& out) {
  check_token(n.name, "node name");
  out << std::string(2 * depth, ' ') << to_string(n.kind) << ' ' << n.name;
  if (n.is_leaf()) {
    check_token(n.behavior, "behavior id");
    out << ' ' << n.behavior;
  }
  out << '\n';
  for (const Node& c : n.children) write_node(c, depth + 1, out);
}

struct Line {
  int depth;
  NodeKind kind;
  std::string name;
  std::string behavior;
};

NodeKind parse_kind(const std::string& s) {
  if (s == "sequence") return NodeKind::Sequence;
  if (s == "fallback") return NodeKind::Fallback;
  if (s == "condition") return NodeKind::Condition;
  if (s == "action") return NodeKind::Action;
  throw ParseError("unknown node kind '" + s + "'");
}

Node build(const std::vector<Line>& lines, std::size_t& i, int depth) {
  const Line& line = lines[i];
  if (line.depth != depth) throw ParseError("inconsistent indentation in tree description");
  ++i;
  Node n;
  n.kind = line.kind;
  n.name = line.name;
  n.behavior = line.behavior;
  const bool leaf = n.is_leaf();
  if (leaf && n.behavior.empty()) {
    throw ParseError("leaf '" + n.name + "' is missing its behavior id");
  }
  if (!leaf && !n.behavior.empty()) {
    throw ParseError("control node '" + n.name + "' cannot carry a behavior id");
  }
  while (i < lines.size() && lines[i].depth > depth) {
    if (leaf) throw ParseError("leaf '" + n.name + "' cannot have children");
    if (lines[i].depth != depth + 1) throw ParseError("indentation jumps more than one level");
    n.children.push_back(build(lines, i, depth + 1));
  }
  if (!leaf && n.children.empty()) {
    throw ParseError("control node '" + n.name + "' has no children");
  }
  return n;
}

}  // namespace

std::string serialize_tree(const Node& root) {
  std::ostringstream out;
  write_node(root, 0, out);
  return out.str();
}

Node parse_tree(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    if (raw.find_first_not_of(" \t") == std::string::npos) continue;  // blank
    std::size_t indent = 0;
    while (indent < raw.size() && raw[indent] == ' ') ++indent;
    if (indent % 2 != 0) throw ParseError("odd indentation width");
    std::istringstream ls(raw.substr(indent));
    std::string kind, name, behavior, extra;
    ls >> kind >> name;
    ls >> behavior;
    if (ls >> extra) throw ParseError("trailing tokens on tree line: '" + raw + "'");
    if (name.empty()) throw ParseError("tree line missing node name: '" + raw + "'");
    lines.push_back({static_cast<int>(indent / 2), parse_kind(kind), name, behavior});
  }
  if (lines.empty()) throw ParseError("empty tree description");
  std::size_t i = 0;
  Node root = build(lines, i, 0);
  if (i != lines.size()) throw ParseError("multiple root nodes in tree description");
  return root;
}

}  // namespace cyberdef::bt
