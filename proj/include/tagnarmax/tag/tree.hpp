#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tagnarmax/error.hpp"
#include "tagnarmax/tag/gorn_address.hpp"

namespace tagnarmax::tag {

using NodeId = std::uint32_t;

enum class LabelKind : std::uint8_t { nonterminal, terminal, epsilon };

/// Node label. Substitution (↓) and foot (★) markers are only legal on
/// nonterminals, and never both at once.
class NodeLabel {
 public:
  static NodeLabel nonterminal(std::string name) { return NodeLabel(LabelKind::nonterminal, std::move(name), false, false); }
  static NodeLabel substitution_site(std::string name) { return NodeLabel(LabelKind::nonterminal, std::move(name), true, false); }
  static NodeLabel foot(std::string name) { return NodeLabel(LabelKind::nonterminal, std::move(name), false, true); }
  static NodeLabel terminal(std::string symbol) { return NodeLabel(LabelKind::terminal, std::move(symbol), false, false); }
  static NodeLabel epsilon() { return NodeLabel(LabelKind::epsilon, "\xCE\xB5", false, false); }

  LabelKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  bool is_nonterminal() const noexcept { return kind_ == LabelKind::nonterminal; }
  bool is_terminal() const noexcept { return kind_ == LabelKind::terminal; }
  bool is_epsilon() const noexcept { return kind_ == LabelKind::epsilon; }
  bool substitution_marker() const noexcept { return substitution_; }
  bool foot_marker() const noexcept { return foot_; }

  /// Same symbol, ignoring markers. This is the l(v) = l(r') test of both operations.
  bool same_symbol(const NodeLabel& other) const noexcept {
    return kind_ == other.kind_ && name_ == other.name_;
  }

  NodeLabel without_markers() const { return NodeLabel(kind_, name_, false, false); }

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;

 private:
  NodeLabel(LabelKind kind, std::string name, bool substitution, bool foot)
      : kind_(kind), name_(std::move(name)), substitution_(substitution), foot_(foot) {}

  LabelKind kind_;
  std::string name_;
  bool substitution_;
  bool foot_;
};

/// Finite ordered labeled tree. Node ids are stable for the lifetime of a
/// value; operations keep the host's ids and give incoming nodes fresh ones.
class SyntacticTree {
 public:
  static constexpr NodeId no_node = std::numeric_limits<NodeId>::max();

  explicit SyntacticTree(NodeLabel root_label) {
    nodes_.push_back(Slot{std::move(root_label), no_node, {}, true});
    root_ = 0;
    size_ = 1;
  }

  NodeId add_child(NodeId parent, NodeLabel label) {
    Slot& p = slot(parent);
    if (!p.label.is_nonterminal())
      throw Error(ErrorKind::invalid_tree, "only nonterminal nodes may have children");
    if (p.label.foot_marker() || p.label.substitution_marker())
      throw Error(ErrorKind::invalid_tree, "marked node '" + p.label.name() + "' must stay a leaf");
    const NodeId id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(Slot{std::move(label), parent, {}, true});
    nodes_[parent].children.push_back(id);
    ++size_;
    return id;
  }

  NodeId root() const noexcept { return root_; }
  std::size_t size() const noexcept { return size_; }
  /// First id never used by this tree; incoming trees are shifted above it.
  NodeId next_id() const noexcept { return static_cast<NodeId>(nodes_.size()); }

  bool contains(NodeId id) const noexcept { return id < nodes_.size() && nodes_[id].present; }
  const NodeLabel& label(NodeId id) const { return slot(id).label; }
  std::span<const NodeId> children(NodeId id) const { return slot(id).children; }
  bool is_leaf(NodeId id) const { return slot(id).children.empty(); }
  std::optional<NodeId> parent(NodeId id) const {
    const NodeId p = slot(id).parent;
    if (p == no_node) return std::nullopt;
    return p;
  }

  std::optional<NodeId> foot() const {
    for (NodeId id = 0; id < nodes_.size(); ++id)
      if (nodes_[id].present && nodes_[id].label.foot_marker()) return id;
    return std::nullopt;
  }

  std::vector<NodeId> foot_nodes() const {
    std::vector<NodeId> out;
    for (NodeId id = 0; id < nodes_.size(); ++id)
      if (nodes_[id].present && nodes_[id].label.foot_marker()) out.push_back(id);
    return out;
  }

  /// Sorted vertex ids.
  std::vector<NodeId> vertices() const {
    std::vector<NodeId> out;
    out.reserve(size_);
    for (NodeId id = 0; id < nodes_.size(); ++id)
      if (nodes_[id].present) out.push_back(id);
    return out;
  }

  /// Sorted (parent, child) pairs.
  std::vector<std::pair<NodeId, NodeId>> edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (NodeId id = 0; id < nodes_.size(); ++id)
      if (nodes_[id].present)
        for (NodeId c : nodes_[id].children) out.emplace_back(id, c);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<NodeId> preorder() const {
    std::vector<NodeId> out;
    out.reserve(size_);
    std::vector<NodeId> stack{root_};
    while (!stack.empty()) {
      const NodeId id = stack.back();
      stack.pop_back();
      out.push_back(id);
      const auto& kids = nodes_[id].children;
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return out;
  }

  std::vector<NodeId> leaves() const {
    std::vector<NodeId> out;
    for (NodeId id : preorder())
      if (nodes_[id].children.empty()) out.push_back(id);
    return out;
  }

  GornAddress address_of(NodeId id) const {
    std::vector<std::uint32_t> path;
    for (NodeId cur = id; slot(cur).parent != no_node; cur = nodes_[cur].parent) {
      const auto& siblings = nodes_[nodes_[cur].parent].children;
      const auto pos = std::find(siblings.begin(), siblings.end(), cur) - siblings.begin();
      path.push_back(static_cast<std::uint32_t>(pos + 1));
    }
    std::reverse(path.begin(), path.end());
    return GornAddress(std::move(path));
  }

  /// Copy with every id shifted by `offset`.
  SyntacticTree rebased(NodeId offset) const {
    SyntacticTree out = *this;
    out.nodes_.clear();
    out.nodes_.resize(offset + nodes_.size());
    for (NodeId id = 0; id < nodes_.size(); ++id) {
      if (!nodes_[id].present) continue;
      Slot s = nodes_[id];
      if (s.parent != no_node) s.parent += offset;
      for (auto& c : s.children) c += offset;
      out.nodes_[id + offset] = std::move(s);
    }
    out.root_ = root_ + offset;
    return out;
  }

  /// Ordered, label-wise equality (markers included). Node ids are ignored.
  friend bool structurally_equal(const SyntacticTree& a, const SyntacticTree& b) {
    if (a.size_ != b.size_) return false;
    std::vector<std::pair<NodeId, NodeId>> stack{{a.root_, b.root_}};
    while (!stack.empty()) {
      auto [x, y] = stack.back();
      stack.pop_back();
      const Slot& sx = a.nodes_[x];
      const Slot& sy = b.nodes_[y];
      if (!(sx.label == sy.label) || sx.children.size() != sy.children.size()) return false;
      for (std::size_t i = 0; i < sx.children.size(); ++i) stack.emplace_back(sx.children[i], sy.children[i]);
    }
    return true;
  }

 private:
  struct Slot {
    NodeLabel label = NodeLabel::epsilon();
    NodeId parent = no_node;
    std::vector<NodeId> children;
    bool present = false;
  };

  const Slot& slot(NodeId id) const {
    if (!contains(id)) throw Error(ErrorKind::invalid_address, "no node with id " + std::to_string(id));
    return nodes_[id];
  }
  Slot& slot(NodeId id) {
    if (!contains(id)) throw Error(ErrorKind::invalid_address, "no node with id " + std::to_string(id));
    return nodes_[id];
  }

  // Replace `v` in its parent's child list by `replacement` (or make it the root).
  void splice_in_place_of(NodeId v, NodeId replacement) {
    const NodeId p = nodes_[v].parent;
    nodes_[replacement].parent = p;
    if (p == no_node) {
      root_ = replacement;
    } else {
      auto& kids = nodes_[p].children;
      *std::find(kids.begin(), kids.end(), v) = replacement;
    }
  }

  void absorb(SyntacticTree&& incoming) {
    if (nodes_.size() < incoming.nodes_.size()) nodes_.resize(incoming.nodes_.size());
    for (NodeId id = 0; id < incoming.nodes_.size(); ++id) {
      if (!incoming.nodes_[id].present) continue;
      nodes_[id] = std::move(incoming.nodes_[id]);
      ++size_;
    }
  }

  void erase(NodeId v) {
    nodes_[v] = Slot{};
    --size_;
  }

  friend SyntacticTree substitute(const SyntacticTree&, NodeId, const SyntacticTree&);
  friend SyntacticTree adjoin(const SyntacticTree&, NodeId, const SyntacticTree&);

  std::vector<Slot> nodes_;
  NodeId root_ = 0;
  std::size_t size_ = 0;
};

bool structurally_equal(const SyntacticTree& a, const SyntacticTree& b);

inline NodeId node_at(const SyntacticTree& tree, const GornAddress& address) {
  NodeId cur = tree.root();
  for (std::uint32_t index : address.path()) {
    const auto kids = tree.children(cur);
    if (index < 1 || index > kids.size())
      throw Error(ErrorKind::invalid_address,
                  "address " + address.to_string() + " leaves the tree at index " + std::to_string(index));
    cur = kids[index - 1];
  }
  return cur;
}

/// Left-to-right leaf labels; epsilon leaves are dropped, nonterminal leaves
/// are reported by name.
inline std::vector<std::string> yield_of(const SyntacticTree& tree) {
  std::vector<std::string> out;
  for (NodeId id : tree.leaves()) {
    const NodeLabel& l = tree.label(id);
    if (!l.is_epsilon()) out.push_back(l.name());
  }
  return out;
}

inline bool is_saturated(const SyntacticTree& tree) {
  for (NodeId id : tree.leaves())
    if (tree.label(id).is_nonterminal()) return false;
  return true;
}

inline std::size_t count_substitution_sites(const SyntacticTree& tree) {
  std::size_t n = 0;
  for (NodeId id : tree.leaves())
    if (tree.label(id).substitution_marker()) ++n;
  return n;
}

/// gamma[v, gamma']: the root of `incoming` takes the place of leaf `v`.
/// `incoming`'s ids are shifted by gamma.next_id(); gamma's ids are kept.
inline SyntacticTree substitute(const SyntacticTree& gamma, NodeId v, const SyntacticTree& incoming) {
  if (!gamma.contains(v)) throw Error(ErrorKind::undefined_substitution, "node is not in the host tree");
  const NodeLabel& lv = gamma.label(v);
  const NodeLabel& lr = incoming.label(incoming.root());
  if (!gamma.is_leaf(v)) throw Error(ErrorKind::undefined_substitution, "target '" + lv.name() + "' is not a leaf");
  if (lv.foot_marker()) throw Error(ErrorKind::undefined_substitution, "target '" + lv.name() + "' is a foot node");
  if (!lv.substitution_marker())
    throw Error(ErrorKind::undefined_substitution, "target '" + lv.name() + "' is not marked for substitution");
  if (!lv.same_symbol(lr))
    throw Error(ErrorKind::undefined_substitution, "label mismatch: '" + lv.name() + "' vs root '" + lr.name() + "'");
  if (incoming.foot())
    throw Error(ErrorKind::undefined_substitution, "an auxiliary tree cannot be substituted");

  SyntacticTree out = gamma;
  SyntacticTree shifted = incoming.rebased(gamma.next_id());
  const NodeId new_root = shifted.root();
  out.absorb(std::move(shifted));
  out.splice_in_place_of(v, new_root);
  out.erase(v);
  return out;
}

/// gamma[v, gamma']: `incoming` replaces internal node `v`; v's children are
/// re-attached, in order, below the foot of `incoming`, which loses its marker.
inline SyntacticTree adjoin(const SyntacticTree& gamma, NodeId v, const SyntacticTree& incoming) {
  if (!gamma.contains(v)) throw Error(ErrorKind::undefined_adjunction, "node is not in the host tree");
  const NodeLabel& lv = gamma.label(v);
  const NodeLabel& lr = incoming.label(incoming.root());
  if (gamma.is_leaf(v)) throw Error(ErrorKind::undefined_adjunction, "target '" + lv.name() + "' is a leaf");
  if (!lv.same_symbol(lr))
    throw Error(ErrorKind::undefined_adjunction, "label mismatch: '" + lv.name() + "' vs root '" + lr.name() + "'");
  const auto feet = incoming.foot_nodes();
  if (feet.size() != 1) throw Error(ErrorKind::undefined_adjunction, "adjoined tree must have exactly one foot");

  const NodeId offset = gamma.next_id();
  SyntacticTree out = gamma;
  SyntacticTree shifted = incoming.rebased(offset);
  const NodeId new_root = shifted.root();
  const NodeId foot = feet.front() + offset;
  out.absorb(std::move(shifted));

  auto& foot_slot = out.nodes_[foot];
  foot_slot.label = foot_slot.label.without_markers();
  foot_slot.children = std::move(out.nodes_[v].children);
  for (NodeId c : foot_slot.children) out.nodes_[c].parent = foot;

  out.splice_in_place_of(v, new_root);
  out.erase(v);
  return out;
}

}  // namespace tagnarmax::tag
