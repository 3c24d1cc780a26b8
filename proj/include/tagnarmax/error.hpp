#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tagnarmax {

enum class ErrorKind {
  invalid_address,
  invalid_tree,
  undefined_substitution,
  undefined_adjunction,
  dangling_reference,
  inapplicable_operation,
  syntax_error,
  causality_violation,
  length_mismatch,
  missing_coefficient,
  not_saturated,
  yield_not_in_language,
  signal_in_wrong_part,
  unrepresentable,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_address: return "invalid-address";
    case ErrorKind::invalid_tree: return "invalid-tree";
    case ErrorKind::undefined_substitution: return "undefined-substitution";
    case ErrorKind::undefined_adjunction: return "undefined-adjunction";
    case ErrorKind::dangling_reference: return "dangling-reference";
    case ErrorKind::inapplicable_operation: return "inapplicable-operation";
    case ErrorKind::syntax_error: return "syntax-error";
    case ErrorKind::causality_violation: return "causality-violation";
    case ErrorKind::length_mismatch: return "length-mismatch";
    case ErrorKind::missing_coefficient: return "missing-coefficient";
    case ErrorKind::not_saturated: return "not-saturated";
    case ErrorKind::yield_not_in_language: return "yield-not-in-language";
    case ErrorKind::signal_in_wrong_part: return "signal-in-wrong-part";
    case ErrorKind::unrepresentable: return "unrepresentable";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the ErrorKind codes so
/// callers (and the CLI) can branch on the kind rather than the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::syntax_error, "at offset " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tagnarmax
