#pragma once

#include <set>
#include <string>
#include <vector>

#include "tagnarmax/tag/grammar.hpp"

namespace tagnarmax::tag {

enum class Operation : std::uint8_t { substitution, adjunction };

struct DerivationEdge;

/// Which elementary tree sits at this node, and what was attached to it.
/// Edge addresses point into the node's own elementary tree as written in
/// the grammar, not into the partially rewritten host.
struct DerivationTree {
  std::string tree;
  std::vector<DerivationEdge> edges;

  std::size_t operation_count() const;
  friend bool operator==(const DerivationTree&, const DerivationTree&);
};

struct DerivationEdge {
  Operation op;
  GornAddress address;
  DerivationTree child;

  friend bool operator==(const DerivationEdge&, const DerivationEdge&) = default;
};

inline bool operator==(const DerivationTree& a, const DerivationTree& b) {
  return a.tree == b.tree && a.edges == b.edges;
}

inline std::size_t DerivationTree::operation_count() const {
  std::size_t n = 0;
  for (const auto& e : edges) n += 1 + e.child.operation_count();
  return n;
}

namespace detail {

inline SyntacticTree derive_node(const DerivationTree& d, const Grammar& g) {
  const ElementaryTree* et = g.find(d.tree);
  if (!et) throw Error(ErrorKind::dangling_reference, "unknown elementary tree '" + d.tree + "'");

  // Resolve every address against the untouched template first.
  std::vector<NodeId> targets;
  std::set<GornAddress> seen;
  targets.reserve(d.edges.size());
  for (const auto& e : d.edges) {
    if (!seen.insert(e.address).second)
      throw Error(ErrorKind::inapplicable_operation,
                  "two operations at address " + e.address.to_string() + " of " + d.tree);
    try {
      targets.push_back(node_at(et->tree, e.address));
    } catch (const Error&) {
      throw Error(ErrorKind::inapplicable_operation, "address " + e.address.to_string() + " is not in " + d.tree);
    }
  }

  SyntacticTree host = et->tree;
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const auto& e = d.edges[i];
    SyntacticTree child = derive_node(e.child, g);
    try {
      host = e.op == Operation::substitution ? substitute(host, targets[i], child) : adjoin(host, targets[i], child);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::undefined_substitution && err.kind() != ErrorKind::undefined_adjunction) throw;
      throw Error(ErrorKind::inapplicable_operation,
                  e.child.tree + " into " + d.tree + " at " + e.address.to_string() + " (" + err.what() + ")");
    }
  }
  return host;
}

}  // namespace detail

/// Derived tree of a derivation fragment rooted at any elementary tree
/// (auxiliary roots give an auxiliary derived tree). Children are derived
/// first and then applied to the parent in the order they are listed.
inline SyntacticTree derive_fragment(const DerivationTree& d, const Grammar& g) { return detail::derive_node(d, g); }

/// Derived tree of a complete derivation: the root must be an initial tree
/// whose root carries the start symbol.
inline SyntacticTree derive(const DerivationTree& d, const Grammar& g) {
  const ElementaryTree* et = g.find(d.tree);
  if (!et) throw Error(ErrorKind::dangling_reference, "unknown elementary tree '" + d.tree + "'");
  if (et->kind != TreeKind::initial || !et->root_label().is_nonterminal() || et->root_label().name() != g.start)
    throw Error(ErrorKind::inapplicable_operation, "derivation root '" + d.tree + "' is not an initial " + g.start + " tree");
  return detail::derive_node(d, g);
}

}  // namespace tagnarmax::tag
