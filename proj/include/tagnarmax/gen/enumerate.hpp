#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tagnarmax/model/model.hpp"
#include "tagnarmax/tag/derivation.hpp"

namespace tagnarmax::gen {

using tag::DerivationTree;
using tag::GornAddress;
using tag::Grammar;
using tag::Operation;

/// Bounds for enumeration and sampling. max_delay is per signal.
struct GenBounds {
  std::size_t max_adjunctions = 4;
  std::size_t max_terms = 3;
  model::MaxLags max_delay{3, 3, 3};
  std::uint32_t max_exponent = 2;
  model::ModelMode mode = model::ModelMode::extended;
};

/// One place in an elementary tree where an operation may attach, with the
/// elementary trees that fit there (sorted by name).
struct AttachmentSlot {
  GornAddress address;
  Operation op;
  std::vector<std::string> candidates;
};

/// Adjunction slots on internal nodes and substitution slots on marked
/// leaves, in pre-order (which is increasing Gorn-address order).
inline std::vector<AttachmentSlot> attachment_slots(const tag::ElementaryTree& et, const Grammar& g) {
  std::vector<AttachmentSlot> out;
  const auto& t = et.tree;
  for (tag::NodeId id : t.preorder()) {
    const auto& l = t.label(id);
    if (!l.is_nonterminal()) continue;
    AttachmentSlot slot{t.address_of(id), Operation::adjunction, {}};
    if (!t.is_leaf(id)) {
      for (const auto& aux : g.auxiliaries)
        if (aux.root_label().same_symbol(l)) slot.candidates.push_back(aux.name);
    } else if (l.substitution_marker()) {
      slot.op = Operation::substitution;
      for (const auto& init : g.initials)
        if (init.root_label().same_symbol(l)) slot.candidates.push_back(init.name);
    } else {
      continue;
    }
    if (slot.op == Operation::adjunction && slot.candidates.empty()) continue;
    std::sort(slot.candidates.begin(), slot.candidates.end());
    out.push_back(std::move(slot));
  }
  return out;
}

namespace detail {

class Enumerator {
 public:
  Enumerator(const Grammar& g, std::function<void(const DerivationTree&)> visit) : g_(g), visit_(std::move(visit)) {}

  void run(std::size_t max_ops) {
    std::vector<std::string> roots;
    for (const auto& et : g_.initials)
      if (et.root_label().is_nonterminal() && et.root_label().name() == g_.start) roots.push_back(et.name);
    std::sort(roots.begin(), roots.end());
    for (const auto& name : roots) {
      DerivationTree root{name, {}};
      expand(root, max_ops, [&](std::size_t) { visit_(root); });
    }
  }

 private:
  using Done = std::function<void(std::size_t used)>;

  const std::vector<AttachmentSlot>& slots(const std::string& name) {
    auto it = cache_.find(name);
    if (it == cache_.end()) {
      const auto* et = g_.find(name);
      if (!et) throw Error(ErrorKind::dangling_reference, "unknown elementary tree '" + name + "'");
      it = cache_.emplace(name, attachment_slots(*et, g_)).first;
    }
    return it->second;
  }

  void expand(DerivationTree& d, std::size_t budget, const Done& done) { fill(d, slots(d.tree), 0, budget, 0, done); }

  // Every completion of slots [i, end) of `d` using at most `budget` operations.
  void fill(DerivationTree& d, const std::vector<AttachmentSlot>& ss, std::size_t i, std::size_t budget,
            std::size_t used, const Done& done) {
    if (i == ss.size()) {
      done(used);
      return;
    }
    const auto& slot = ss[i];
    if (slot.op == Operation::adjunction) fill(d, ss, i + 1, budget, used, done);
    if (budget == 0) return;
    for (const auto& cand : slot.candidates) {
      DerivationTree child{cand, {}};
      expand(child, budget - 1, [&](std::size_t child_used) {
        d.edges.push_back({slot.op, slot.address, child});
        fill(d, ss, i + 1, budget - 1 - child_used, used + 1 + child_used, done);
        d.edges.pop_back();
      });
    }
  }

  const Grammar& g_;
  std::function<void(const DerivationTree&)> visit_;
  std::map<std::string, std::vector<AttachmentSlot>> cache_;
};

}  // namespace detail

/// Streams every derivation with at most `max_operations` operations, each
/// exactly once, in a fixed order: slots by address, "nothing attached"
/// before any tree, trees by name. Substitution slots are always filled.
inline void for_each_derivation(const Grammar& g, std::size_t max_operations,
                                const std::function<void(const DerivationTree&)>& visit) {
  detail::Enumerator(g, visit).run(max_operations);
}

inline std::vector<DerivationTree> enumerate_derivations(const Grammar& g, std::size_t max_operations) {
  std::vector<DerivationTree> out;
  for_each_derivation(g, max_operations, [&](const DerivationTree& d) { out.push_back(d); });
  return out;
}

inline std::vector<DerivationTree> enumerate_derivations(const Grammar& g, const GenBounds& bounds) {
  return enumerate_derivations(g, bounds.max_adjunctions);
}

}  // namespace tagnarmax::gen
