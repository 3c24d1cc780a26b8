#pragma once

#include <set>
#include <string>
#include <vector>

#include "tagnarmax/tag/tree.hpp"

namespace tagnarmax::tag {

enum class TreeKind : std::uint8_t { initial, auxiliary };

struct ElementaryTree {
  std::string name;
  TreeKind kind;
  SyntacticTree tree;

  static ElementaryTree initial(std::string name, SyntacticTree tree) {
    return {std::move(name), TreeKind::initial, std::move(tree)};
  }
  static ElementaryTree auxiliary(std::string name, SyntacticTree tree) {
    return {std::move(name), TreeKind::auxiliary, std::move(tree)};
  }

  const NodeLabel& root_label() const { return tree.label(tree.root()); }
};

/// G = <N, T, S, I, A>.
struct Grammar {
  std::set<std::string> nonterminals;
  std::set<std::string> terminals;
  std::string start;
  std::vector<ElementaryTree> initials;
  std::vector<ElementaryTree> auxiliaries;

  const ElementaryTree* find(const std::string& name) const {
    for (const auto& t : initials)
      if (t.name == name) return &t;
    for (const auto& t : auxiliaries)
      if (t.name == name) return &t;
    return nullptr;
  }
};

struct Diagnostic {
  std::string code;
  std::string tree;     // empty for grammar-level problems
  std::string address;  // Gorn address of the offending node, if any
  std::string message;

  std::string to_string() const {
    std::string out = code;
    if (!tree.empty()) out += " in " + tree;
    if (!address.empty()) out += " at " + address;
    if (!message.empty()) out += ": " + message;
    return out;
  }
};

namespace detail {

inline void check_elementary(const Grammar& g, const ElementaryTree& et, std::vector<Diagnostic>& out) {
  const SyntacticTree& t = et.tree;
  auto report = [&](std::string code, NodeId id, std::string msg) {
    out.push_back({std::move(code), et.name, t.address_of(id).to_string(), std::move(msg)});
  };

  for (NodeId id : t.preorder()) {
    const NodeLabel& l = t.label(id);
    const bool leaf = t.is_leaf(id);
    if (!leaf && !l.is_nonterminal()) report("internal-not-nonterminal", id, l.name());
    if (l.is_nonterminal() && !g.nonterminals.contains(l.name())) report("unknown-nonterminal", id, l.name());
    if (l.is_terminal() && !g.terminals.contains(l.name())) report("unknown-terminal", id, l.name());
    if (l.substitution_marker() && !leaf) report("substitution-marker-not-leaf", id, l.name());
    if (l.foot_marker() && !leaf) report("foot-not-leaf", id, l.name());
  }

  const auto feet = t.foot_nodes();
  if (feet.size() > 1) report("multiple-feet", feet[1], "");
  if (et.kind == TreeKind::initial && !feet.empty()) report("initial-has-foot", feet.front(), "");
  if (et.kind == TreeKind::auxiliary) {
    if (feet.empty()) {
      out.push_back({"auxiliary-missing-foot", et.name, "", ""});
    } else if (!t.label(feet.front()).same_symbol(et.root_label())) {
      report("foot-label-mismatch", feet.front(),
             t.label(feet.front()).name() + " vs root " + et.root_label().name());
    }
  }
}

}  // namespace detail

/// Empty iff every grammar and elementary-tree invariant holds.
inline std::vector<Diagnostic> validate_grammar(const Grammar& g) {
  std::vector<Diagnostic> out;
  for (const auto& n : g.nonterminals)
    if (g.terminals.contains(n)) out.push_back({"alphabets-not-disjoint", "", "", n});
  if (!g.nonterminals.contains(g.start)) out.push_back({"start-not-nonterminal", "", "", g.start});

  std::set<std::string> names;
  auto check_name = [&](const ElementaryTree& et) {
    if (!names.insert(et.name).second) out.push_back({"duplicate-tree-name", et.name, "", ""});
  };
  for (const auto& et : g.initials) {
    check_name(et);
    if (et.kind != TreeKind::initial) out.push_back({"wrong-catalog", et.name, "", "auxiliary tree in I"});
    detail::check_elementary(g, et, out);
  }
  for (const auto& et : g.auxiliaries) {
    check_name(et);
    if (et.kind != TreeKind::auxiliary) out.push_back({"wrong-catalog", et.name, "", "initial tree in A"});
    detail::check_elementary(g, et, out);
  }
  return out;
}

}  // namespace tagnarmax::tag
