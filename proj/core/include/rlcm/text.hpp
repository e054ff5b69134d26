#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "rlcm/element.hpp"

namespace rlcm::text {

/// Minimal recursive-descent cursor shared by the element grammars.
class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  std::size_t pos() const { return pos_; }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  std::string_view rest() const { return s_.substr(pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool consume(std::string_view lit) {
    skip_ws();
    if (s_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail("unexpected input", std::string("'") + c + "'");
  }

  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{}) fail("expected integer", "integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  bool next_is_digit() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+';
  }

  void expect_end() {
    if (!at_end()) fail("trailing input", "end of input");
  }

  [[noreturn]] void fail(const std::string& what, std::string expected) const {
    throw ParseError(what, pos_, std::move(expected));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline std::string pair_text(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace rlcm::text
