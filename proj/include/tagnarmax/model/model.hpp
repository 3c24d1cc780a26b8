#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "tagnarmax/error.hpp"

namespace tagnarmax::model {

/// Declaration order is the canonical order u < y < ξ.
enum class Signal : std::uint8_t { input, output, noise };

constexpr std::string_view signal_name(Signal s) noexcept {
  switch (s) {
    case Signal::input: return "u";
    case Signal::output: return "y";
    case Signal::noise: return "xi";
  }
  return "?";
}

/// One delayed signal, e.g. (y, 2) is y_{k-2}.
struct FactorKey {
  Signal signal;
  std::uint32_t delay;

  friend auto operator<=>(const FactorKey&, const FactorKey&) = default;
  friend bool operator==(const FactorKey&, const FactorKey&) = default;
};

/// Factor -> exponent. Zero exponents are never stored.
using FactorMap = std::map<FactorKey, std::uint32_t>;

/// c_i times a product of delayed signals. An empty factor map is a constant term.
struct Monomial {
  std::uint32_t coeff_id = 1;
  std::optional<double> coeff_value;
  FactorMap factors;

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& [key, exp] : factors) d += exp;
    return d;
  }

  void multiply(FactorKey key, std::uint32_t exponent = 1) {
    if (exponent) factors[key] += exponent;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Strict mode keeps noise factors at delay >= 1; extended mode also admits
/// the current noise sample inside products.
enum class ModelMode : std::uint8_t { strict, extended };

/// y_k = sum_i c_i * prod(factors) + xi_k. The additive xi_k is implicit.
struct NarmaxModel {
  std::vector<Monomial> terms;
  ModelMode mode = ModelMode::extended;

  friend bool operator==(const NarmaxModel&, const NarmaxModel&) = default;
};

/// Throws causality-violation when a factor breaks the signal's delay rule.
inline void check_term(const Monomial& t, ModelMode mode) {
  for (const auto& [key, exp] : t.factors) {
    if (exp == 0) throw Error(ErrorKind::causality_violation, "zero exponent stored in factor map");
    if (key.signal == Signal::output && key.delay < 1)
      throw Error(ErrorKind::causality_violation, "output factor y[0] makes the model non-causal");
    if (key.signal == Signal::noise && mode == ModelMode::strict && key.delay < 1)
      throw Error(ErrorKind::causality_violation, "xi[0] inside a product is not allowed in strict mode");
  }
}

inline void check_model(const NarmaxModel& m) {
  for (const auto& t : m.terms) check_term(t, m.mode);
}

/// Total order used by canonicalize: degree first, then the sorted factor
/// sequence compared lexicographically (key, then exponent).
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end());
}

/// Canonical terms over a single polynomial; used for NARMAX models and both
/// halves of an NBJ model.
inline std::vector<Monomial> canonicalize_terms(std::vector<Monomial> terms) {
  std::stable_sort(terms.begin(), terms.end(), canonical_less);
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().factors == t.factors) {
      auto& merged = out.back();
      if (merged.coeff_value && t.coeff_value) {
        merged.coeff_value = *merged.coeff_value + *t.coeff_value;
      } else {
        merged.coeff_value.reset();
      }
      continue;
    }
    out.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].coeff_id = static_cast<std::uint32_t>(i + 1);
  return out;
}

inline NarmaxModel canonicalize(NarmaxModel m) {
  m.terms = canonicalize_terms(std::move(m.terms));
  return m;
}

/// Same term structure after canonicalization; coefficient values, ids and
/// mode are ignored.
inline bool structurally_equal(const NarmaxModel& a, const NarmaxModel& b) {
  const auto ca = canonicalize(a), cb = canonicalize(b);
  if (ca.terms.size() != cb.terms.size()) return false;
  for (std::size_t i = 0; i < ca.terms.size(); ++i)
    if (ca.terms[i].factors != cb.terms[i].factors) return false;
  return true;
}

/// J (input), L (noise) and M (output) delay sets of one term, plus their
/// increasing enumerations.
struct TermIndexSets {
  std::set<std::uint32_t> input;
  std::set<std::uint32_t> noise;
  std::set<std::uint32_t> output;
  std::vector<std::uint32_t> input_sequence;
  std::vector<std::uint32_t> noise_sequence;
  std::vector<std::uint32_t> output_sequence;
};

inline TermIndexSets index_sets(const Monomial& t) {
  TermIndexSets s;
  for (const auto& [key, exp] : t.factors) {
    if (exp == 0) continue;
    switch (key.signal) {
      case Signal::input: s.input.insert(key.delay); break;
      case Signal::noise: s.noise.insert(key.delay); break;
      case Signal::output: s.output.insert(key.delay); break;
    }
  }
  s.input_sequence.assign(s.input.begin(), s.input.end());
  s.noise_sequence.assign(s.noise.begin(), s.noise.end());
  s.output_sequence.assign(s.output.begin(), s.output.end());
  return s;
}

struct MaxLags {
  std::uint32_t input = 0;
  std::uint32_t output = 0;
  std::uint32_t noise = 0;

  std::uint32_t& operator[](Signal s) {
    return s == Signal::input ? input : s == Signal::output ? output : noise;
  }
  std::uint32_t operator[](Signal s) const {
    return s == Signal::input ? input : s == Signal::output ? output : noise;
  }

  friend bool operator==(const MaxLags&, const MaxLags&) = default;
};

inline MaxLags max_lags(const NarmaxModel& m) {
  MaxLags lags;
  for (const auto& t : m.terms)
    for (const auto& [key, exp] : t.factors) lags[key.signal] = std::max(lags[key.signal], key.delay);
  return lags;
}

}  // namespace tagnarmax::model
