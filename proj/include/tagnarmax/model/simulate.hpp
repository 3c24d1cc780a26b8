#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "tagnarmax/model/model.hpp"

namespace tagnarmax::model {

/// Runs the recursion for k = 0..N-1 with zero initial conditions: every
/// sample before time 0 reads as 0. coeffs[i] multiplies terms[i].
inline std::vector<double> simulate(const NarmaxModel& m, std::span<const double> coeffs, std::span<const double> u,
                                    std::span<const double> xi) {
  if (coeffs.size() != m.terms.size())
    throw Error(ErrorKind::length_mismatch, std::to_string(coeffs.size()) + " coefficients for " +
                                                std::to_string(m.terms.size()) + " terms");
  if (u.size() != xi.size())
    throw Error(ErrorKind::length_mismatch,
                "input has " + std::to_string(u.size()) + " samples, noise has " + std::to_string(xi.size()));
  check_model(m);

  const std::size_t n = u.size();
  std::vector<double> y(n, 0.0);
  auto sample = [&](Signal s, std::size_t k, std::uint32_t delay) -> double {
    if (delay > k) return 0.0;
    const std::size_t at = k - delay;
    switch (s) {
      case Signal::input: return u[at];
      case Signal::output: return y[at];
      case Signal::noise: return xi[at];
    }
    return 0.0;
  };

  for (std::size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.terms.size(); ++i) {
      double prod = coeffs[i];
      for (const auto& [key, exp] : m.terms[i].factors) prod *= std::pow(sample(key.signal, k, key.delay), exp);
      acc += prod;
    }
    y[k] = acc + xi[k];
  }
  return y;
}

/// Numeric coefficients attached to the terms; throws missing-coefficient
/// if any term is purely symbolic.
inline std::vector<double> attached_coefficients(const NarmaxModel& m) {
  std::vector<double> out;
  out.reserve(m.terms.size());
  for (const auto& t : m.terms) {
    if (!t.coeff_value) throw Error(ErrorKind::missing_coefficient, "term c" + std::to_string(t.coeff_id) + " has no value");
    out.push_back(*t.coeff_value);
  }
  return out;
}

/// simulate() using the coefficient values carried by the terms.
inline std::vector<double> simulate(const NarmaxModel& m, std::span<const double> u, std::span<const double> xi) {
  const auto coeffs = attached_coefficients(m);
  return simulate(m, coeffs, u, xi);
}

}  // namespace tagnarmax::model
