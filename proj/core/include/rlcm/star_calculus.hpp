#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rlcm/semigroup.hpp"
#include "rlcm/zappa_szep.hpp"

namespace rlcm {

/// Zero, or v_p v_q^*.
struct Monomial {
  bool zero = true;
  Element p;
  Element q;

  static Monomial Zero() { return {}; }
  static Monomial VV(Element p, Element q) { return {false, std::move(p), std::move(q)}; }
  bool is_zero() const { return zero; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Covariance product. Uses S.right_lcm; see with_brute_lcm for semigroups
/// without a closed form.
Monomial mono_multiply(const SemigroupDescriptor& s, const Monomial& m1, const Monomial& m2);

Monomial mono_adjoint(const Monomial& m);

/// Equality up to the unit action VV{p, q} ~ VV{pu, qu}, decided by division.
bool mono_equal(const SemigroupDescriptor& s, const Monomial& m1, const Monomial& m2);

/// "0" or "v(p) v(q)*".
std::string mono_text(const SemigroupDescriptor& s, const Monomial& m);

/// Copy of `s` whose right_lcm is brute_right_lcm over `ball` (which may
/// throw BallTooSmall).
SemigroupDescriptor with_brute_lcm(SemigroupDescriptor s, Ball ball);

enum class TokenKind { V, VStar, E };

/// One letter of a *-word: v_p, v_p^* or the projection e_p = v_p v_p^*.
struct Token {
  TokenKind kind = TokenKind::V;
  Element element;
  friend bool operator==(const Token&, const Token&) = default;
};

Monomial token_monomial(const SemigroupDescriptor& s, const Token& t);

/// Left fold of mono_multiply, starting from VV{e, e}.
Monomial word_normalize(const SemigroupDescriptor& s, const std::vector<Token>& word);

/// How the t(...) and s(...) tokens of a word map into the semigroup.
struct WordContext {
  SemigroupDescriptor semigroup;
  /// Element for t(text); empty when the semigroup has no U-part.
  std::function<Element(std::string_view)> parse_t;
  /// Element for s(text); empty when the semigroup has no A-part.
  std::function<Element(std::string_view)> parse_s;
};

/// Tokens separated by whitespace: v(p), v(p)*, t(u), t(u)*, s(a), s(a)*,
/// e(p). The argument is the text between the outer parentheses; if that
/// does not parse on its own it is retried wrapped in parentheses.
std::vector<Token> parse_word(const WordContext& ctx, std::string_view text);

// ---------------------------------------------------------------------------
// Foundation sets

enum class FoundationStatus { Foundation, NotFoundation, UndecidedBeyondBall };

struct FoundationVerdict {
  FoundationStatus status = FoundationStatus::Foundation;
  std::optional<Element> witness;
  std::size_t checked = 0;
};

class ModeUnsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact criterion for free monoids: with N the longest member of F, every
/// word of length N is comparable with a member of F. Throws ModeUnsupported
/// for other semigroups.
FoundationVerdict is_foundation_exact(const SemigroupDescriptor& s, const std::vector<Element>& f);

/// Checks pP meets qP for some q in F, for each p in the ball. A pair is
/// settled by the closed right LCM when there is one; otherwise only an
/// in-ball common multiple settles it and the rest stay undecided.
FoundationVerdict is_foundation_bounded(const SemigroupDescriptor& s, const std::vector<Element>& f,
                                        const Ball& ball);

struct TransferResult {
  std::vector<Element> set;
  FoundationVerdict verdict;
};

/// Clause (a): {(e_U, a)} in U |><| A, verified bounded at `radius`.
TransferResult foundation_transfer_a(const ZSDescriptor& d, const Element& a, int radius);
/// Clause (b): {(u, e_A) : u in F}, verified bounded at `radius`.
TransferResult foundation_transfer_b(const ZSDescriptor& d, const std::vector<Element>& f, int radius);
/// Clause (c): the U-parts of a foundation set of U |><| A, verified exactly
/// when U is free and bounded at `radius` otherwise.
TransferResult foundation_transfer_c(const ZSDescriptor& d, const std::vector<Element>& g, int radius);

/// Grows a foundation set from {e} by replacing a random member f with
/// {f c : c in family} `splits` times. `family` must itself be a foundation
/// set, e.g. all letters of a free monoid or {(k, p) : k < p} in U.
std::vector<Element> grow_foundation_set(const SemigroupDescriptor& s, const std::vector<Element>& family,
                                         int splits, std::mt19937_64& rng);

}  // namespace rlcm
