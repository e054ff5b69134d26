#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rlcm/element.hpp"

namespace rlcm {

/// A right least common multiple r = p * left_comp = q * right_comp.
struct LcmWitness {
  Element lcm;
  Element left_comp;
  Element right_comp;

  friend bool operator==(const LcmWitness&, const LcmWitness&) = default;
};

/// Disjoint principal right ideals are represented by std::nullopt.
using RightLcmResult = std::optional<LcmWitness>;

inline bool is_disjoint(const RightLcmResult& r) { return !r.has_value(); }

/// Value-level bundle of functions describing one concrete monoid.
///
/// Every member is pure. `right_lcm` may be left empty when no closed form is
/// known; callers then fall back to brute_right_lcm over a ball.
struct SemigroupDescriptor {
  std::string name;
  Element identity;
  std::vector<Element> generators;
  std::function<Element(const Element&, const Element&)> multiply;
  std::function<bool(const Element&)> is_unit;
  std::function<std::optional<Element>(const Element&, const Element&)> left_divide;
  std::function<RightLcmResult(const Element&, const Element&)> right_lcm;
  std::function<std::string(const Element&)> display;
  std::function<Element(std::string_view)> parse;

  bool has_right_lcm() const { return static_cast<bool>(right_lcm); }
};

/// Raised when a ball cannot certify minimality of a common multiple.
class BallTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite set of elements expressible as products of at most `radius`
/// generators, in a deterministic order (by word length, then by code).
class Ball {
 public:
  Ball() = default;

  int radius() const { return radius_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  bool contains(const Element& e) const { return index_.contains(e); }
  std::optional<std::size_t> index_of(const Element& e) const;
  /// Minimal generator word length; only meaningful for members.
  int length_of(const Element& e) const;
  int length_at(std::size_t i) const { return lengths_[i]; }
  const Element& operator[](std::size_t i) const { return elements_[i]; }

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  /// Arbitrary finite search region; lengths are supplied by the caller.
  static Ball from_elements(int radius, std::vector<Element> elements, std::vector<int> lengths);

 private:
  friend Ball enumerate_ball(const SemigroupDescriptor& s, int radius);

  void push(Element e, int length);

  int radius_ = 0;
  std::vector<Element> elements_;
  std::vector<int> lengths_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
};

std::optional<Element> left_divide(const SemigroupDescriptor& s, const Element& p, const Element& r);

Ball enumerate_ball(const SemigroupDescriptor& s, int radius);

enum class SearchStatus { Found, Disjoint, BallTooSmall };

struct LcmSearch {
  SearchStatus status = SearchStatus::Disjoint;
  RightLcmResult result;
};

/// Non-throwing form of brute_right_lcm.
LcmSearch search_right_lcm(const SemigroupDescriptor& s, const Element& p, const Element& q,
                           const Ball& ball);

/// Exhaustive right-LCM oracle over a ball.
///
/// The result is the common multiple of minimal (generator length, display
/// text). Throws BallTooSmall when the candidate sits on the ball boundary or
/// fails to left-divide another in-ball common multiple.
RightLcmResult brute_right_lcm(const SemigroupDescriptor& s, const Element& p, const Element& q,
                               const Ball& ball);

/// True iff r1 = r2 u for a unit u, checked by division in both directions.
bool equal_up_to_units(const SemigroupDescriptor& s, const Element& r1, const Element& r2);

struct Violation {
  std::string check;
  std::string witness;
};

/// Generic list of property violations with a count of compared instances.
struct CheckReport {
  std::string suite;
  std::size_t compared = 0;
  std::size_t skipped = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  void fail(std::string check, std::string witness) {
    violations.push_back({std::move(check), std::move(witness)});
  }
  bool has_failure(std::string_view check) const;
};

/// Associativity, identity, left cancellativity and closed-form vs brute
/// right LCM agreement (up to units) over every tuple in the ball.
CheckReport check_cancellativity_and_lcm(const SemigroupDescriptor& s, const Ball& ball);

}  // namespace rlcm
