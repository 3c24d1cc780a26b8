#pragma once

// Nonlinear Box-Jenkins structure:
//   yhat_k = f(u, yhat)             process, noise free
//   v_k    = g(u, v, xi) + xi_k      noise model
//   y_k    = yhat_k + v_k
//
// Both polynomials reuse Monomial; the Signal::output slot stands for yhat in
// f and for v in g. Text form: "yhat = <f>; v = <g> + xi" with f = "0" when empty.

#include <string>
#include <string_view>

#include "tagnarmax/model/text.hpp"

namespace tagnarmax::model {

struct NbjModel {
  std::vector<Monomial> process;  // f over {u, yhat}
  std::vector<Monomial> noise;    // g over {u, v, xi}
  ModelMode mode = ModelMode::extended;

  friend bool operator==(const NbjModel&, const NbjModel&) = default;
};

inline const SignalNames& process_names() {
  static const SignalNames names{{"u", "yhat", "xi"}};
  return names;
}
inline const SignalNames& noise_names() {
  static const SignalNames names{{"u", "v", "xi"}};
  return names;
}

inline void check_nbj(const NbjModel& m) {
  for (const auto& t : m.process) {
    check_term(t, ModelMode::extended);
    for (const auto& [key, exp] : t.factors)
      if (key.signal == Signal::noise)
        throw Error(ErrorKind::signal_in_wrong_part, "noise factor in the process polynomial");
  }
  for (const auto& t : m.noise) check_term(t, m.mode);
}

inline NbjModel canonicalize(NbjModel m) {
  m.process = canonicalize_terms(std::move(m.process));
  m.noise = canonicalize_terms(std::move(m.noise));
  return m;
}

inline bool structurally_equal(const NbjModel& a, const NbjModel& b) {
  auto same = [](const std::vector<Monomial>& x, const std::vector<Monomial>& y) {
    const auto cx = canonicalize_terms(x), cy = canonicalize_terms(y);
    if (cx.size() != cy.size()) return false;
    for (std::size_t i = 0; i < cx.size(); ++i)
      if (cx[i].factors != cy[i].factors) return false;
    return true;
  };
  return same(a.process, b.process) && same(a.noise, b.noise);
}

inline std::string format_nbj_text(const NbjModel& m) {
  std::string f = format_terms(m.process, process_names());
  std::string g = format_terms(m.noise, noise_names());
  return "yhat = " + (f.empty() ? std::string("0") : f) + "; v = " + (g.empty() ? std::string("xi") : g + " + xi");
}

inline NbjModel parse_nbj_text(std::string_view text, ModelMode mode = ModelMode::extended) {
  text_detail::Scanner s{text};
  NbjModel m;
  m.mode = mode;
  s.expect("yhat");
  s.expect("=");
  if (s.at("0")) {
    ++s.pos;
  } else {
    while (true) {
      m.process.push_back(text_detail::read_term(s, process_names(), ModelMode::extended));
      if (!s.at("+")) break;
      ++s.pos;
    }
  }
  s.expect(";");
  s.expect("v");
  s.expect("=");
  while (true) {
    if (s.at_word("xi")) {
      s.pos += 2;
      break;
    }
    m.noise.push_back(text_detail::read_term(s, noise_names(), mode));
    s.expect("+");
  }
  if (!s.done()) s.fail("trailing input after NBJ model");
  check_nbj(m);
  return m;
}

}  // namespace tagnarmax::model
