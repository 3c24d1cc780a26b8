#pragma once

// Yield language of one polynomial:
//
//   expr   := (term '+')* base
//   term   := 'c' '×' factor ('×' factor)*
//   factor := signal 'q⁻¹'*
//
// The output signal must carry at least `min_output_shifts` shifts.

#include <span>
#include <string>
#include <vector>

#include "tagnarmax/model/model.hpp"
#include "tagnarmax/narmax/gn.hpp"
#include "tagnarmax/tag/tree.hpp"

namespace tagnarmax::narmax {

namespace detail {

[[noreturn]] inline void reject(std::size_t index, const std::string& what) {
  throw Error(ErrorKind::yield_not_in_language, "token " + std::to_string(index) + ": " + what);
}

}  // namespace detail

/// Terms in left-to-right order, coefficient slots numbered c1, c2, ...
inline std::vector<model::Monomial> parse_yield_terms(std::span<const std::string> tokens, const YieldAlphabet& alpha) {
  std::vector<model::Monomial> terms;
  std::size_t i = 0;
  const std::size_t n = tokens.size();
  auto signal_of = [&](const std::string& tok) -> std::optional<Signal> {
    for (int s = 0; s < 3; ++s)
      if (!alpha.signal_tokens[s].empty() && alpha.signal_tokens[s] == tok) return static_cast<Signal>(s);
    return std::nullopt;
  };

  while (true) {
    if (i >= n) detail::reject(i, "unexpected end of yield, expected '" + alpha.base + "' or a term");
    if (tokens[i] == alpha.base) {
      if (i + 1 != n) detail::reject(i + 1, "input after the final '" + alpha.base + "'");
      return terms;
    }
    if (tokens[i] != symbols::coeff) detail::reject(i, "expected 'c', got '" + tokens[i] + "'");
    ++i;
    model::Monomial term;
    term.coeff_id = static_cast<std::uint32_t>(terms.size() + 1);
    do {
      if (i >= n || tokens[i] != symbols::times) detail::reject(i, "expected '×'");
      ++i;
      if (i >= n) detail::reject(i, "expected a signal");
      const auto sig = signal_of(tokens[i]);
      if (!sig) detail::reject(i, "expected a signal, got '" + tokens[i] + "'");
      const std::size_t at = i++;
      std::uint32_t delay = 0;
      while (i < n && tokens[i] == symbols::shift) {
        ++delay;
        ++i;
      }
      if (*sig == Signal::output && delay < alpha.min_output_shifts)
        detail::reject(at, "output factor '" + tokens[at] + "' without a delay");
      term.multiply({*sig, delay});
    } while (i < n && tokens[i] == symbols::times);
    terms.push_back(std::move(term));
    if (i >= n && alpha.bare_terms_allowed) return terms;
    if (i >= n || tokens[i] != symbols::plus) detail::reject(i, "expected '+'");
    ++i;
  }
}

/// Model read off a token sequence of G_N, canonicalized.
inline model::NarmaxModel yield_to_model(std::span<const std::string> tokens,
                                         model::ModelMode mode = model::ModelMode::extended) {
  model::NarmaxModel m{parse_yield_terms(tokens, gn_alphabet()), mode};
  model::check_model(m);
  return model::canonicalize(std::move(m));
}

/// Inverse of the model-to-yield mapping on saturated derived trees.
inline model::NarmaxModel derived_to_model(const tag::SyntacticTree& t,
                                           model::ModelMode mode = model::ModelMode::extended) {
  if (!tag::is_saturated(t)) throw Error(ErrorKind::not_saturated, "derived tree still has nonterminal leaves");
  const auto tokens = tag::yield_of(t);
  return yield_to_model(tokens, mode);
}

/// Space-separated yield tokens.
inline std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < text.size() && !(text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

inline std::string join_tokens(std::span<const std::string> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace tagnarmax::narmax
