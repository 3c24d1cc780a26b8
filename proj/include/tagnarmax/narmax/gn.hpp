#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tagnarmax/model/model.hpp"
#include "tagnarmax/tag/text.hpp"

namespace tagnarmax::narmax {

using model::Signal;
using tag::GornAddress;
using tag::Grammar;

namespace symbols {
inline constexpr std::string_view xi = "ξ";
inline constexpr std::string_view times = "×";
inline constexpr std::string_view plus = "+";
inline constexpr std::string_view shift = "q⁻¹";
inline constexpr std::string_view coeff = "c";
inline constexpr std::string_view yhat = "ŷ";
}  // namespace symbols

enum class AuxRole : std::uint8_t { additive, multiplicative, delay };

struct AuxInfo {
  std::string name;
  AuxRole role;
  std::optional<Signal> signal;  // empty for delay trees
};

/// Where model-to-derivation construction attaches things, for one polynomial.
struct TreeFamily {
  std::string initial;
  GornAddress attach_site;                    // node of the initial tree that takes the term chain
  std::array<std::string, 3> additive;        // by Signal; empty when the signal is not available
  std::array<std::string, 3> multiplicative;  // by Signal
  std::string delay;
  GornAddress additive_product{1};        // expr1 of an additive tree
  GornAddress additive_factor{1, 3};      // expr2 of an additive tree
  GornAddress multiplicative_factor{3};   // expr2 of a multiplicative tree
  std::uint32_t builtin_output_delay = 1; // q⁻¹ already present on the feedback factor
};

/// Terminal spelling of one polynomial's yield.
struct YieldAlphabet {
  std::array<std::string, 3> signal_tokens;  // by Signal; empty when not available
  std::string base;                          // trailing token of every yield ("ξ" or "0")
  bool bare_terms_allowed = false;           // also accept (term '+')* term with no base token
  std::uint32_t min_output_shifts = 1;
};

struct GnCatalog {
  Grammar grammar;
  std::vector<AuxInfo> roles;
  TreeFamily family;
  YieldAlphabet alphabet;

  const AuxInfo* role_of(std::string_view name) const {
    for (const auto& r : roles)
      if (r.name == name) return &r;
    return nullptr;
  }
};

inline const TreeFamily& gn_family() {
  static const TreeFamily family{
      "alpha1", {}, {"beta1", "beta2", "beta3"}, {"beta4", "beta5", "beta6"}, "beta7", {1}, {1, 3}, {3}, 1};
  return family;
}

inline const YieldAlphabet& gn_alphabet() {
  static const YieldAlphabet alphabet{{"u", "y", std::string(symbols::xi)}, std::string(symbols::xi), false, 1};
  return alphabet;
}

/// The polynomial NARMAX grammar: one initial tree yielding ξ, three additive
/// trees (u, y, ξ), three multiplicative trees and one delay tree.
inline GnCatalog build_gn() {
  GnCatalog cat;
  Grammar& g = cat.grammar;
  g.nonterminals = {"expr0", "expr1", "expr2", "op", "par"};
  g.terminals = {"u", "y", "ξ", "+", "c", "×", "q⁻¹"};
  g.start = "expr0";
  g.initials.push_back(tag::ElementaryTree::initial("alpha1", tag::parse_tree("expr0(ξ)")));

  const std::array<std::string, 3> factor{"expr2(u)", "expr2(y q⁻¹)", "expr2(ξ)"};
  const std::array<Signal, 3> signals{Signal::input, Signal::output, Signal::noise};
  for (int i = 0; i < 3; ++i) {
    const std::string name = "beta" + std::to_string(i + 1);
    g.auxiliaries.push_back(tag::ElementaryTree::auxiliary(
        name, tag::parse_tree("expr0(expr1(par(c) op(×) " + factor[i] + ") op(+) expr0★)")));
    cat.roles.push_back({name, AuxRole::additive, signals[i]});
  }
  for (int i = 0; i < 3; ++i) {
    const std::string name = "beta" + std::to_string(i + 4);
    g.auxiliaries.push_back(
        tag::ElementaryTree::auxiliary(name, tag::parse_tree("expr1(expr1★ op(×) " + factor[i] + ")")));
    cat.roles.push_back({name, AuxRole::multiplicative, signals[i]});
  }
  g.auxiliaries.push_back(tag::ElementaryTree::auxiliary("beta7", tag::parse_tree("expr2(expr2★ q⁻¹)")));
  cat.roles.push_back({"beta7", AuxRole::delay, std::nullopt});

  cat.family = gn_family();
  cat.alphabet = gn_alphabet();
  return cat;
}

enum class GrammarPreset : std::uint8_t { narmax, arx, narx, fir, volterra };

constexpr std::string_view preset_name(GrammarPreset p) noexcept {
  switch (p) {
    case GrammarPreset::narmax: return "narmax";
    case GrammarPreset::arx: return "arx";
    case GrammarPreset::narx: return "narx";
    case GrammarPreset::fir: return "fir";
    case GrammarPreset::volterra: return "volterra";
  }
  return "?";
}

inline std::optional<GrammarPreset> parse_preset(std::string_view name) {
  for (auto p : {GrammarPreset::narmax, GrammarPreset::arx, GrammarPreset::narx, GrammarPreset::fir,
                 GrammarPreset::volterra})
    if (preset_name(p) == name) return p;
  return std::nullopt;
}

inline std::vector<std::string> preset_auxiliaries(GrammarPreset p) {
  switch (p) {
    case GrammarPreset::narmax: return {"beta1", "beta2", "beta3", "beta4", "beta5", "beta6", "beta7"};
    case GrammarPreset::arx: return {"beta1", "beta2", "beta7"};
    case GrammarPreset::narx: return {"beta1", "beta2", "beta4", "beta5", "beta7"};
    case GrammarPreset::fir: return {"beta1", "beta7"};
    case GrammarPreset::volterra: return {"beta1", "beta4", "beta7"};
  }
  return {};
}

/// Same grammar with the auxiliary set cut down to `keep`.
inline Grammar restrict(const Grammar& g, const std::vector<std::string>& keep) {
  Grammar out = g;
  std::erase_if(out.auxiliaries, [&](const tag::ElementaryTree& et) {
    return std::find(keep.begin(), keep.end(), et.name) == keep.end();
  });
  return out;
}

inline Grammar restrict(GrammarPreset preset) { return restrict(build_gn().grammar, preset_auxiliaries(preset)); }

}  // namespace tagnarmax::narmax
