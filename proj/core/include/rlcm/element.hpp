#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rlcm {

/// Opaque handle for an element of some concrete semigroup.
///
/// The code is the semigroup's canonical encoding: two handles denote the
/// same element iff their codes are equal. Only the owning descriptor knows
/// how to interpret the integers.
struct Element {
  std::vector<std::int64_t> code;

  Element() = default;
  Element(std::initializer_list<std::int64_t> init) : code(init) {}
  explicit Element(std::vector<std::int64_t> c) : code(std::move(c)) {}

  std::size_t size() const { return code.size(); }
  std::int64_t operator[](std::size_t i) const { return code[i]; }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element& a, const Element& b) {
    return a.code <=> b.code;
  }
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ e.code.size();
    for (auto v : e.code) {
      h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Raised by text parsers. `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position, std::string expected)
      : std::runtime_error(what + " at position " + std::to_string(position) +
                           (expected.empty() ? "" : " (expected " + expected + ")")),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Euclidean remainder: always in [0, |m|).
constexpr std::int64_t euclid_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t mm = m < 0 ? -m : m;
  const std::int64_t r = a % mm;
  return r < 0 ? r + mm : r;
}

/// Floor division matching euclid_mod for positive divisors.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t m) {
  return (a - euclid_mod(a, m)) / m;
}

}  // namespace rlcm
