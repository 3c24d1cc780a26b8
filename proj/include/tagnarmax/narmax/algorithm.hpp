#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "tagnarmax/narmax/yield.hpp"
#include "tagnarmax/tag/derivation.hpp"

namespace tagnarmax::narmax {

using tag::DerivationEdge;
using tag::DerivationTree;
using tag::Operation;

/// Shared immutable instance of the NARMAX grammar catalog.
inline const GnCatalog& gn() {
  static const GnCatalog catalog = build_gn();
  return catalog;
}

namespace detail {

inline void sort_edges(DerivationTree& d) {
  std::stable_sort(d.edges.begin(), d.edges.end(),
                   [](const DerivationEdge& a, const DerivationEdge& b) { return a.address < b.address; });
}

// Hang `n` stacked delay trees on `node` at `address`; each further copy
// adjoins at the root of the previous one.
inline void add_delays(DerivationTree& node, const GornAddress& address, std::uint32_t n, const TreeFamily& family) {
  if (n == 0) return;
  DerivationTree chain{family.delay, {}};
  for (std::uint32_t i = 1; i < n; ++i) chain = DerivationTree{family.delay, {{Operation::adjunction, {}, std::move(chain)}}};
  node.edges.push_back({Operation::adjunction, address, std::move(chain)});
}

inline std::uint32_t delay_trees_for(const model::FactorKey& f, const TreeFamily& family) {
  return f.signal == Signal::output ? f.delay - family.builtin_output_delay : f.delay;
}

inline const std::string& tree_for(const std::array<std::string, 3>& names, Signal s) {
  const auto& name = names[static_cast<std::size_t>(s)];
  if (name.empty())
    throw Error(ErrorKind::unrepresentable, "no elementary tree introduces signal " + std::string(model::signal_name(s)));
  return name;
}

// One additive tree for the first factor (input, else noise, else output),
// then a multiplicative chain for the remaining factors, each with its delays.
inline DerivationTree term_derivation(const model::Monomial& term, const TreeFamily& family) {
  const auto sets = model::index_sets(term);
  std::optional<model::FactorKey> first;
  if (!sets.input.empty()) {
    first = model::FactorKey{Signal::input, sets.input_sequence.front()};
  } else if (!sets.noise.empty()) {
    first = model::FactorKey{Signal::noise, sets.noise_sequence.front()};
  } else if (!sets.output.empty()) {
    first = model::FactorKey{Signal::output, sets.output_sequence.front()};
  }
  if (!first) throw Error(ErrorKind::unrepresentable, "constant terms have no derivation in this grammar");

  DerivationTree additive{tree_for(family.additive, first->signal), {}};
  add_delays(additive, family.additive_factor, delay_trees_for(*first, family), family);

  model::FactorMap remaining = term.factors;
  if (--remaining[*first] == 0) remaining.erase(*first);

  // Factor order: inputs, then noise, then outputs, each by increasing delay.
  std::vector<model::FactorKey> rest;
  for (Signal s : {Signal::input, Signal::noise, Signal::output})
    for (const auto& [key, exp] : remaining)
      if (key.signal == s)
        for (std::uint32_t e = 0; e < exp; ++e) rest.push_back(key);

  if (!rest.empty()) {
    std::optional<DerivationTree> chain;
    for (auto it = rest.rbegin(); it != rest.rend(); ++it) {
      DerivationTree mult{tree_for(family.multiplicative, it->signal), {}};
      if (chain) mult.edges.push_back({Operation::adjunction, {}, std::move(*chain)});
      add_delays(mult, family.multiplicative_factor, delay_trees_for(*it, family), family);
      sort_edges(mult);
      chain = std::move(mult);
    }
    additive.edges.push_back({Operation::adjunction, family.additive_product, std::move(*chain)});
  }
  sort_edges(additive);
  return additive;
}

// Additive chain for a list of terms. The first term ends up deepest, which
// puts it leftmost in the yield.
inline std::optional<DerivationTree> term_chain(const std::vector<model::Monomial>& terms, const TreeFamily& family) {
  std::optional<DerivationTree> chain;
  for (const auto& term : terms) {
    DerivationTree node = term_derivation(term, family);
    if (chain) node.edges.push_back({Operation::adjunction, {}, std::move(*chain)});
    sort_edges(node);
    chain = std::move(node);
  }
  return chain;
}

}  // namespace detail

/// Derivation tree over G_N whose derived tree yields `m`.
inline DerivationTree model_to_derivation(const model::NarmaxModel& m, const TreeFamily& family = gn_family()) {
  try {
    model::check_model(m);
  } catch (const Error& e) {
    throw Error(ErrorKind::unrepresentable, e.what());
  }
  DerivationTree root{family.initial, {}};
  if (auto chain = detail::term_chain(m.terms, family))
    root.edges.push_back({Operation::adjunction, family.attach_site, std::move(*chain)});
  return root;
}

/// derived_to_model(derive(model_to_derivation(m))) == canonicalize(m), structurally.
inline bool roundtrip_check(const model::NarmaxModel& m) {
  const auto canonical = model::canonicalize(m);
  const auto derivation = model_to_derivation(canonical);
  const auto tree = tag::derive(derivation, gn().grammar);
  const auto back = derived_to_model(tree, m.mode);
  return model::structurally_equal(back, canonical);
}

}  // namespace tagnarmax::narmax
