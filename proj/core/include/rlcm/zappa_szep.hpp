#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "rlcm/semigroup.hpp"
#include "rlcm/zoo.hpp"

namespace rlcm {

/// Raised when A's principal right ideals fail to be totally ordered for a
/// pair reached by the LCM construction.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ActionFn = std::function<Element(const Element& a, const Element& u)>;

/// External Zappa-Szep data: U right LCM, A left cancellative with totally
/// ordered principal right ideals, and the two intertwining maps.
///
/// `action_inverse(a, u)` must return the unique z with action(a, z) = u.
struct ZSDescriptor {
  std::string name;
  SemigroupDescriptor U;
  SemigroupDescriptor A;
  ActionFn action;
  ActionFn restriction;
  ActionFn action_inverse;
};

struct ZSElement {
  Element u;
  Element a;
  friend bool operator==(const ZSElement&, const ZSElement&) = default;
};

struct ZSLcm {
  ZSElement lcm;
  ZSElement left_comp;
  ZSElement right_comp;
};

/// (u, a)(v, b) = (u (a . v), (a|_v) b).
ZSElement zs_multiply(const ZSDescriptor& d, const ZSElement& p, const ZSElement& q);

/// Constructive right LCM. Disjoint exactly when u and v have no common
/// right multiple in U. In the tie case the representative (w, a|_x) is
/// returned. Throws HypothesisViolation if the restrictions are incomparable.
std::optional<ZSLcm> zs_right_lcm(const ZSDescriptor& d, const ZSElement& p, const ZSElement& q);

/// Exhaustive check of (B1)-(B8) plus injectivity of each a . (-) on the
/// U-ball and exactness of action_inverse. Violation names are "B1".."B8",
/// "injective" and "section".
CheckReport zs_axiom_check(const ZSDescriptor& d, const Ball& ball_u, const Ball& ball_a);

/// Encoding [|u|, u..., a...]; text "(u ; a)".
Element zs_encode(const ZSElement& p);
ZSElement zs_decode(const Element& e);

/// The product as an ordinary descriptor named "zs:<name>", generated by
/// (g, e_A) and (e_U, h) over the generators of U and A.
SemigroupDescriptor zs_product(const ZSDescriptor& d);

// ---------------------------------------------------------------------------
// Example products. The odometer and 2-graph products live in self_similar.hpp.

/// BS(c, d)^+ as X* |><| N with X = {0..d-1}, letter k standing for b^k a.
ZSDescriptor zs_bs(BSParams params);

/// N x| N^x as U |><| {(m, 1)}.
ZSDescriptor zs_nxn();

/// Z x| Z^x as U |><| (Z x {1, -1}).
ZSDescriptor zs_zxz();

ZSElement bs_to_zs(const BSNormalForm& p);
BSNormalForm zs_to_bs(const ZSElement& p);

/// ((m mod a, a), (floor(m / a), 1)) and its inverse.
ZSElement nxn_to_zs(NatAffine p);
NatAffine zs_to_nxn(const ZSElement& p);
ZSElement zxz_to_zs(IntAffine p);
IntAffine zs_to_zxz(const ZSElement& p);

/// bs_semigroup with right_lcm supplied by the Zappa-Szep construction.
SemigroupDescriptor bs_semigroup_with_lcm(BSParams params);

}  // namespace rlcm
