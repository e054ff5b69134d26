#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rlcm/semigroup.hpp"

namespace rlcm {

// ---------------------------------------------------------------------------
// Concrete values

/// Word over {0, ..., k-1}; the empty word is the identity.
struct FreeWord {
  std::vector<int> letters;
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

/// (r, x) with 0 <= r < x, the progression r + xN.
struct FracPair {
  std::int64_t r = 0;
  std::int64_t x = 1;
  friend bool operator==(const FracPair&, const FracPair&) = default;
};

/// (m, a) in N x| N^x.
struct NatAffine {
  std::int64_t m = 0;
  std::int64_t a = 1;
  friend bool operator==(const NatAffine&, const NatAffine&) = default;
};

/// (m, a) in Z x| Z^x, a != 0.
struct IntAffine {
  std::int64_t m = 0;
  std::int64_t a = 1;
  friend bool operator==(const IntAffine&, const IntAffine&) = default;
};

/// Parameters of the positive Baumslag-Solitar monoid <a, b | a b^c = b^d a>.
struct BSParams {
  int c = 1;
  int d = 2;
};

/// b^{alphas[0]} a b^{alphas[1]} a ... b^{alphas[n-1]} a b^{beta}, each alpha < d.
struct BSNormalForm {
  std::vector<int> alphas;
  std::int64_t beta = 0;
  friend bool operator==(const BSNormalForm&, const BSNormalForm&) = default;
};

template <typename T>
struct LcmOf {
  T lcm;
  T left_comp;
  T right_comp;
  friend bool operator==(const LcmOf&, const LcmOf&) = default;
};

// ---------------------------------------------------------------------------
// N x| N^x, its fraction part U and Z x| Z^x

NatAffine nxn_multiply(NatAffine p, NatAffine q);

/// Unique factorisation p = u t with u in U and t = (k, 1).
std::pair<FracPair, NatAffine> nxn_decompose(NatAffine p);

FracPair frac_multiply(FracPair p, FracPair q);

/// Least element of (r + xN) and (s + yN), by stepping along the coarser
/// progression; nullopt when gcd(x, y) does not divide s - r.
std::optional<std::int64_t> least_common_element(std::int64_t r, std::int64_t x,
                                                 std::int64_t s, std::int64_t y);

std::optional<LcmOf<FracPair>> frac_right_lcm(FracPair p, FracPair q);

std::optional<LcmOf<NatAffine>> nxn_right_lcm(NatAffine p, NatAffine q);

IntAffine zxz_multiply(IntAffine p, IntAffine q);

/// Unique factorisation p = u t with u in U and t = (k, +-1).
std::pair<FracPair, IntAffine> zxz_decompose(IntAffine p);

std::optional<LcmOf<IntAffine>> zxz_right_lcm(IntAffine p, IntAffine q);

// ---------------------------------------------------------------------------
// BS(c, d)^+ by rewriting b^d a -> a b^c

/// Exponent blocks e_0 a e_1 a ... a e_n of an arbitrary positive word.
using BSBlocks = std::vector<std::int64_t>;

BSBlocks bs_blocks(const BSNormalForm& p);

/// Positions i < n with e_i >= d, where the rule applies.
std::vector<std::size_t> bs_redexes(BSParams params, const BSBlocks& blocks);

/// One application of b^d a -> a b^c in front of the i-th a.
void bs_rewrite_at(BSParams params, BSBlocks& blocks, std::size_t i);

/// Leftmost-innermost normalisation.
BSNormalForm bs_normalize(BSParams params, BSBlocks blocks);

/// Normalisation applying the rule at a uniformly random redex each step.
BSNormalForm bs_normalize_random(BSParams params, BSBlocks blocks, std::mt19937_64& rng);

BSNormalForm bs_multiply(BSParams params, const BSNormalForm& p, const BSNormalForm& q);

// ---------------------------------------------------------------------------
// Encodings and descriptors

Element encode(const FreeWord& w);
Element encode(FracPair p);
Element encode(NatAffine p);
Element encode(IntAffine p);
Element encode(const BSNormalForm& p);

FreeWord decode_free(const Element& e);
FracPair decode_frac(const Element& e);
NatAffine decode_nxn(const Element& e);
IntAffine decode_zxz(const Element& e);
BSNormalForm decode_bs(const Element& e);

/// Free monoid on {0, ..., k-1}; 1 <= k <= 10 so letters print as digits.
SemigroupDescriptor free_monoid(int k);

/// (N, +) generated by 1. With a symbol, elements print as powers
/// ("e", "b", "b^3"); otherwise as decimals.
SemigroupDescriptor nat_additive(std::string symbol = "");

/// (Z, +) generated by +-1, every element a unit; texts "e", "g", "g^-2".
SemigroupDescriptor int_group(std::string symbol = "g");

/// U = {(r, x) : 0 <= r < x} generated by (r, p) for p in {2, 3}.
SemigroupDescriptor frac_semigroup();

/// N x| N^x generated by (1,1), (0,2), (0,3).
SemigroupDescriptor nxn_semigroup();

/// A = {(m, 1)} inside N x| N^x.
SemigroupDescriptor nxn_translations();

/// Z x| Z^x generated by (+-1,1), (0,-1), (0,2), (0,3).
SemigroupDescriptor zxz_semigroup();

/// A = Z x {1, -1} inside Z x| Z^x.
SemigroupDescriptor zxz_signed_translations();

/// BS(c, d)^+ generated by a and b. No closed-form right LCM here; see
/// bs_semigroup_with_lcm in zappa_szep.hpp.
SemigroupDescriptor bs_semigroup(BSParams params);

}  // namespace rlcm
