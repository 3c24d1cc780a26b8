#pragma once

#include "tagnarmax/model/nbj.hpp"
#include "tagnarmax/narmax/algorithm.hpp"

namespace tagnarmax::narmax {

/// Grammar whose initial tree yields "0 , ξ": the process polynomial f left
/// of the comma, the noise polynomial g right of it. Each side has its own
/// additive, multiplicative and delay trees.
struct NbjCatalog {
  Grammar grammar;
  std::vector<AuxInfo> process_roles;
  std::vector<AuxInfo> noise_roles;
  TreeFamily process_family;
  TreeFamily noise_family;
  YieldAlphabet process_alphabet;
  YieldAlphabet noise_alphabet;
};

inline NbjCatalog build_gnbj() {
  NbjCatalog cat;
  Grammar& g = cat.grammar;
  g.nonterminals = {"expr_bj", "expr0f", "expr1f", "expr2f", "expr0g", "expr1g", "expr2g", "op", "par"};
  g.terminals = {"u", "ŷ", "v", "ξ", "+", "c", "×", "q⁻¹", "0", ","};
  g.start = "expr_bj";
  g.initials.push_back(tag::ElementaryTree::initial("alpha1", tag::parse_tree("expr_bj(expr0f(0) , expr0g(ξ))")));

  struct Side {
    char tag;
    std::array<std::string, 3> factor;  // by Signal, empty if absent
    std::vector<AuxInfo>* roles;
    TreeFamily* family;
  };
  Side sides[] = {
      {'f', {"u", "ŷ q⁻¹", ""}, &cat.process_roles, &cat.process_family},
      {'g', {"u", "v q⁻¹", "ξ"}, &cat.noise_roles, &cat.noise_family},
  };
  for (auto& side : sides) {
    const std::string e0 = std::string("expr0") + side.tag, e1 = std::string("expr1") + side.tag,
                      e2 = std::string("expr2") + side.tag;
    TreeFamily& fam = *side.family;
    fam.initial = "alpha1";
    fam.attach_site = side.tag == 'f' ? GornAddress{1} : GornAddress{3};
    for (int s = 0; s < 3; ++s) {
      if (side.factor[s].empty()) continue;
      const Signal sig = static_cast<Signal>(s);
      const std::string leaf = e2 + "(" + side.factor[s] + ")";
      const std::string add = std::string("beta") + side.tag + std::to_string(s + 1);
      const std::string mul = std::string("beta") + side.tag + std::to_string(s + 4);
      g.auxiliaries.push_back(tag::ElementaryTree::auxiliary(
          add, tag::parse_tree(e0 + "(" + e1 + "(par(c) op(×) " + leaf + ") op(+) " + e0 + "★)")));
      g.auxiliaries.push_back(
          tag::ElementaryTree::auxiliary(mul, tag::parse_tree(e1 + "(" + e1 + "★ op(×) " + leaf + ")")));
      side.roles->push_back({add, AuxRole::additive, sig});
      side.roles->push_back({mul, AuxRole::multiplicative, sig});
      fam.additive[s] = add;
      fam.multiplicative[s] = mul;
    }
    fam.delay = std::string("beta") + side.tag + "7";
    g.auxiliaries.push_back(
        tag::ElementaryTree::auxiliary(fam.delay, tag::parse_tree(e2 + "(" + e2 + "★ q⁻¹)")));
    side.roles->push_back({fam.delay, AuxRole::delay, std::nullopt});
  }
  std::sort(g.auxiliaries.begin(), g.auxiliaries.end(),
            [](const tag::ElementaryTree& a, const tag::ElementaryTree& b) { return a.name < b.name; });

  cat.process_alphabet = YieldAlphabet{{"u", std::string(symbols::yhat), ""}, "0", true, 1};
  cat.noise_alphabet = YieldAlphabet{{"u", "v", std::string(symbols::xi)}, std::string(symbols::xi), false, 1};
  return cat;
}

inline const NbjCatalog& gnbj() {
  static const NbjCatalog catalog = build_gnbj();
  return catalog;
}

/// Splits a saturated NBJ yield at its single top-level comma and reads f
/// and g from the two halves.
inline model::NbjModel nbj_yield_to_model(std::span<const std::string> tokens,
                                          model::ModelMode mode = model::ModelMode::extended) {
  const auto& cat = gnbj();
  std::size_t comma = tokens.size();
  std::size_t commas = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == ",") {
      comma = i;
      ++commas;
    }
  }
  if (commas != 1)
    throw Error(ErrorKind::yield_not_in_language, "NBJ yield needs exactly one ',' (found " + std::to_string(commas) + ")");
  const auto f = tokens.first(comma);
  const auto g = tokens.subspan(comma + 1);
  for (const auto& tok : f)
    if (tok == symbols::xi || tok == "v")
      throw Error(ErrorKind::signal_in_wrong_part, "'" + tok + "' in the process part");
  for (const auto& tok : g)
    if (tok == symbols::yhat) throw Error(ErrorKind::signal_in_wrong_part, "'" + tok + "' in the noise part");

  model::NbjModel m;
  m.mode = mode;
  m.process = parse_yield_terms(f, cat.process_alphabet);
  m.noise = parse_yield_terms(g, cat.noise_alphabet);
  model::check_nbj(m);
  return model::canonicalize(std::move(m));
}

inline model::NbjModel nbj_derived_to_model(const tag::SyntacticTree& t,
                                            model::ModelMode mode = model::ModelMode::extended) {
  if (!tag::is_saturated(t)) throw Error(ErrorKind::not_saturated, "derived tree still has nonterminal leaves");
  const auto tokens = tag::yield_of(t);
  return nbj_yield_to_model(tokens, mode);
}

/// Runs the NARMAX construction once per side and hangs both chains on the
/// shared initial tree.
inline DerivationTree nbj_model_to_derivation(const model::NbjModel& m) {
  try {
    model::check_nbj(m);
  } catch (const Error& e) {
    throw Error(ErrorKind::unrepresentable, e.what());
  }
  const auto& cat = gnbj();
  DerivationTree root{"alpha1", {}};
  if (auto f = detail::term_chain(m.process, cat.process_family))
    root.edges.push_back({Operation::adjunction, cat.process_family.attach_site, std::move(*f)});
  if (auto g = detail::term_chain(m.noise, cat.noise_family))
    root.edges.push_back({Operation::adjunction, cat.noise_family.attach_site, std::move(*g)});
  return root;
}

}  // namespace tagnarmax::narmax
