#pragma once

#include <set>
#include <string>
#include <string_view>

#include "tagnarmax/model/model.hpp"

namespace tagnarmax::model {

enum class ModelClass : std::uint8_t { fir, volterra, arx, armax, narx, narmax };

constexpr std::string_view class_name(ModelClass c) noexcept {
  switch (c) {
    case ModelClass::fir: return "FIR";
    case ModelClass::volterra: return "Volterra";
    case ModelClass::arx: return "ARX";
    case ModelClass::armax: return "ARMAX";
    case ModelClass::narx: return "NARX";
    case ModelClass::narmax: return "NARMAX";
  }
  return "?";
}

/// Structural class membership. A constant term has degree 0 and therefore
/// never excludes a model from any of the degree-1 classes.
inline std::set<ModelClass> classify(const NarmaxModel& m) {
  bool only_input = true, no_noise = true, linear = true;
  for (const auto& t : m.terms) {
    if (t.degree() > 1) linear = false;
    for (const auto& [key, exp] : t.factors) {
      if (key.signal != Signal::input) only_input = false;
      if (key.signal == Signal::noise) no_noise = false;
    }
  }
  std::set<ModelClass> out{ModelClass::narmax};
  if (only_input && linear) out.insert(ModelClass::fir);
  if (only_input) out.insert(ModelClass::volterra);
  if (no_noise && linear) out.insert(ModelClass::arx);
  if (linear) out.insert(ModelClass::armax);
  if (no_noise) out.insert(ModelClass::narx);
  return out;
}

inline std::string format_classes(const std::set<ModelClass>& classes) {
  std::string out;
  for (auto c : classes) {
    if (!out.empty()) out += ' ';
    out += class_name(c);
  }
  return out;
}

}  // namespace tagnarmax::model
