#pragma once

// Model text:
//
//   model  := term ('+' term)* '+' 'xi' | 'xi'
//   term   := coeff ('*' factor)*
//   coeff  := 'c' INT (':' REAL)?
//   factor := ('u' | 'y' | 'xi') '[' '-'? INT ']' ('^' INT)?
//
// Delays are written as non-positive offsets: u[0] is u_k, y[-1] is y_{k-1}.

#include <algorithm>
#include <array>
#include <charconv>
#include <string>
#include <string_view>
#include <system_error>

#include "tagnarmax/model/model.hpp"

namespace tagnarmax::model {

/// Spelling of the three signal slots. NBJ models reuse the output slot for
/// their own feedback signal (yhat in f, v in g).
struct SignalNames {
  std::array<std::string_view, 3> names{"u", "y", "xi"};

  std::string_view operator[](Signal s) const { return names[static_cast<std::size_t>(s)]; }
};

namespace text_detail {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
  }
  bool done() {
    skip();
    return pos >= text.size();
  }
  bool at(std::string_view s) {
    skip();
    return text.substr(pos, s.size()) == s;
  }
  // Keyword match that does not swallow the prefix of a longer identifier.
  bool at_word(std::string_view s) {
    if (!at(s)) return false;
    const std::size_t end = pos + s.size();
    if (end >= text.size()) return true;
    const char ch = text[end];
    return !((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_');
  }
  void expect(std::string_view s) {
    if (!at(s)) fail("expected '" + std::string(s) + "'");
    pos += s.size();
  }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos, what); }

  std::uint32_t integer() {
    skip();
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) fail("expected an unsigned integer");
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }

  double real() {
    skip();
    double value = 0;
    const char* first = text.data() + pos;
    if (pos < text.size() && text[pos] == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec != std::errc{}) fail("expected a real number");
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }
};

inline Monomial read_term(Scanner& s, const SignalNames& names, ModelMode mode) {
  s.expect("c");
  Monomial t;
  t.coeff_id = s.integer();
  if (t.coeff_id == 0) s.fail("coefficient ids start at 1");
  if (s.at(":")) {
    ++s.pos;
    t.coeff_value = s.real();
  }
  while (s.at("*")) {
    ++s.pos;
    s.skip();
    const std::size_t factor_pos = s.pos;
    Signal sig{};
    bool found = false;
    // Longest spelling first so "yhat" is not read as "y".
    std::array<Signal, 3> order{Signal::input, Signal::output, Signal::noise};
    std::sort(order.begin(), order.end(), [&](Signal a, Signal b) { return names[a].size() > names[b].size(); });
    for (Signal cand : order) {
      if (s.at(names[cand])) {
        s.pos += names[cand].size();
        sig = cand;
        found = true;
        break;
      }
    }
    if (!found) s.fail("expected a signal name");
    s.expect("[");
    bool negative = false;
    if (s.at("-")) {
      ++s.pos;
      negative = true;
    }
    const std::uint32_t offset = s.integer();
    s.expect("]");
    if (!negative && offset != 0)
      throw Error(ErrorKind::causality_violation,
                  "at offset " + std::to_string(factor_pos) + ": future sample " + std::string(names[sig]) + "[" +
                      std::to_string(offset) + "]");
    std::uint32_t exponent = 1;
    if (s.at("^")) {
      ++s.pos;
      exponent = s.integer();
      if (exponent == 0) s.fail("exponents must be >= 1");
    }
    const FactorKey key{sig, offset};
    if (sig == Signal::output && offset == 0)
      throw Error(ErrorKind::causality_violation,
                  "at offset " + std::to_string(factor_pos) + ": " + std::string(names[sig]) + "[0] is not causal");
    if (sig == Signal::noise && offset == 0 && mode == ModelMode::strict)
      throw Error(ErrorKind::causality_violation,
                  "at offset " + std::to_string(factor_pos) + ": xi[0] inside a term requires extended mode");
    t.multiply(key, exponent);
  }
  return t;
}

inline std::string format_real(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

inline void write_term(std::string& out, const Monomial& t, const SignalNames& names) {
  out += 'c';
  out += std::to_string(t.coeff_id);
  if (t.coeff_value) {
    out += ':';
    out += format_real(*t.coeff_value);
  }
  for (const auto& [key, exp] : t.factors) {
    out += '*';
    out += names[key.signal];
    out += key.delay == 0 ? "[0]" : "[-" + std::to_string(key.delay) + "]";
    if (exp > 1) out += "^" + std::to_string(exp);
  }
}

}  // namespace text_detail

/// Parses model text as written (term order and ids preserved); the result
/// is not canonicalized.
inline NarmaxModel parse_model_text(std::string_view text, ModelMode mode = ModelMode::extended) {
  text_detail::Scanner s{text};
  const SignalNames names;
  NarmaxModel m;
  m.mode = mode;
  while (true) {
    if (s.at_word("xi")) {
      s.pos += 2;
      if (!s.done()) s.fail("trailing input after the final 'xi'");
      return m;
    }
    if (s.done()) s.fail("model text must end with '+ xi'");
    m.terms.push_back(text_detail::read_term(s, names, mode));
    s.expect("+");
  }
}

inline std::string format_terms(const std::vector<Monomial>& terms, const SignalNames& names) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    text_detail::write_term(out, terms[i], names);
  }
  return out;
}

inline std::string format_model_text(const NarmaxModel& m) {
  const std::string terms = format_terms(m.terms, SignalNames{});
  return terms.empty() ? "xi" : terms + " + xi";
}

}  // namespace tagnarmax::model
