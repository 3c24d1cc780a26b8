#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "tagnarmax/error.hpp"

namespace tagnarmax::tag {

/// Path of 1-based child indices from the root; the empty path is the root.
/// Written as "0" for the root and "1.2.1" otherwise.
class GornAddress {
 public:
  GornAddress() = default;
  GornAddress(std::initializer_list<std::uint32_t> path) : path_(path) { check(); }
  explicit GornAddress(std::vector<std::uint32_t> path) : path_(std::move(path)) { check(); }

  bool is_root() const noexcept { return path_.empty(); }
  std::size_t depth() const noexcept { return path_.size(); }
  const std::vector<std::uint32_t>& path() const noexcept { return path_; }

  GornAddress child(std::uint32_t index) const {
    GornAddress out = *this;
    out.path_.push_back(index);
    out.check();
    return out;
  }

  std::string to_string() const {
    if (path_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < path_.size(); ++i) {
      if (i) out += '.';
      out += std::to_string(path_[i]);
    }
    return out;
  }

  static GornAddress parse(std::string_view text) {
    if (text == "0" || text == "\xCE\xB5") return {};  // "0" or "ε"
    std::vector<std::uint32_t> path;
    std::uint64_t current = 0;
    bool have_digit = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char ch = text[i];
      if (ch >= '0' && ch <= '9') {
        current = current * 10 + static_cast<std::uint64_t>(ch - '0');
        if (current > UINT32_MAX) throw SyntaxError(i, "address index overflow");
        have_digit = true;
      } else if (ch == '.' && have_digit) {
        path.push_back(static_cast<std::uint32_t>(current));
        current = 0;
        have_digit = false;
      } else {
        throw SyntaxError(i, "malformed Gorn address '" + std::string(text) + "'");
      }
    }
    if (!have_digit) throw SyntaxError(text.size(), "malformed Gorn address '" + std::string(text) + "'");
    path.push_back(static_cast<std::uint32_t>(current));
    for (auto index : path)
      if (index == 0) throw SyntaxError(0, "Gorn address indices are 1-based: '" + std::string(text) + "'");
    return GornAddress(std::move(path));
  }

  friend auto operator<=>(const GornAddress&, const GornAddress&) = default;
  friend bool operator==(const GornAddress&, const GornAddress&) = default;

 private:
  void check() const {
    for (auto index : path_)
      if (index == 0) throw Error(ErrorKind::invalid_address, "Gorn address indices must be >= 1");
  }

  std::vector<std::uint32_t> path_;
};

}  // namespace tagnarmax::tag
