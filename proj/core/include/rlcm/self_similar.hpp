#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rlcm/semigroup.hpp"
#include "rlcm/zappa_szep.hpp"
#include "rlcm/zoo.hpp"

namespace rlcm {

// ---------------------------------------------------------------------------
// Self-similar Z-actions on X*

/// A self-similar action of Z = <gamma> on {0..alphabet-1}*. Group elements
/// are exponents k standing for gamma^k.
struct SSADescriptor {
  std::string name;
  int alphabet = 2;
  std::function<int(std::int64_t g, int x)> act;
  std::function<std::int64_t(std::int64_t g, int x)> res;
};

/// Adding machine on n letters, least significant digit first. gamma^k is
/// evaluated by |k| single-generator steps through (gh)|_x = g|_{h.x} h|_x.
SSADescriptor adding_machine(int n);

/// (g . w, g|_w) by letterwise recursion.
std::pair<FreeWord, std::int64_t> ssa_act_word(const SSADescriptor& d, std::int64_t g, const FreeWord& w);

/// X* |><| N for the adding machine on n letters; A prints as powers of g.
ZSDescriptor zs_odometer(int n);

// ---------------------------------------------------------------------------
// 2-graphs

/// theta(y_j, x_i) = (x_i', y_j'), stored at entries[j * m + i].
struct ThetaTable {
  int m = 2;
  int n = 2;
  std::vector<std::pair<int, int>> entries;

  std::pair<int, int> at(int j, int i) const { return entries[static_cast<std::size_t>(j * m + i)]; }
  std::pair<int, int>& at(int j, int i) { return entries[static_cast<std::size_t>(j * m + i)]; }
  bool is_bijection() const;
};

/// The table with j + i n = i' + j' m.
ThetaTable theta_build(int m, int n);

/// Normal form v w with v in X*, w in Y*.
struct TwoGraphWord {
  FreeWord x;
  FreeWord y;
  friend bool operator==(const TwoGraphWord&, const TwoGraphWord&) = default;
};

/// A letter of an arbitrary word over X and Y.
struct TwoGraphLetter {
  bool is_y = false;
  int index = 0;
  friend bool operator==(const TwoGraphLetter&, const TwoGraphLetter&) = default;
};

std::vector<TwoGraphLetter> ftheta_letters(const TwoGraphWord& z);

/// Rewrites the leftmost y x pair until the word is in X* Y*.
TwoGraphWord ftheta_normalize(const ThetaTable& t, std::vector<TwoGraphLetter> word);

/// Rewrites a uniformly random y x pair each step.
TwoGraphWord ftheta_normalize_random(const ThetaTable& t, std::vector<TwoGraphLetter> word,
                                     std::mt19937_64& rng);

TwoGraphWord ftheta_multiply(const ThetaTable& t, const TwoGraphWord& z1, const TwoGraphWord& z2);

/// x_i -> (i, m), y_j -> (j, n) into the fraction part of N x| N^x.
FracPair ftheta_embed(const ThetaTable& t, const TwoGraphWord& z);

Element encode(const TwoGraphWord& z);
TwoGraphWord decode_ftheta(const Element& e);

/// F_theta^+ with text "x0x1.y2". The closed right LCM (through the
/// embedding) is only installed when gcd(m, n) = 1.
SemigroupDescriptor ftheta_semigroup(const ThetaTable& t);

/// F_theta^+ |><| Z, with gamma acting on X by the m-letter adding machine and
/// on Y by the n-letter one.
ZSDescriptor zs_ftheta(const ThetaTable& t);

/// Checks theta_X(y, x) = g^-1 . theta_X(g.y, g|_y.x) and
/// theta_Y(y, x) = (g|_{theta_X(y,x)})^-1 . theta_Y(g.y, g|_y.x)
/// for every g in [g_min, g_max] and every letter pair.
CheckReport prop_compat_check(const ThetaTable& t, const SSADescriptor& dx, const SSADescriptor& dy,
                              std::int64_t g_min, std::int64_t g_max);

struct SurveyCounterexample {
  TwoGraphWord p;
  TwoGraphWord q;
  std::vector<TwoGraphWord> minimal;
};

struct SurveyVerdict {
  std::size_t elements = 0;
  std::size_t pairs = 0;
  std::size_t pairs_with_common = 0;
  std::vector<SurveyCounterexample> counterexamples;

  bool right_lcm() const { return counterexamples.empty(); }
};

/// All unordered pairs of words with bidegree at most (max_x, max_y). A pair
/// whose in-box common multiples have two or more minimal elements is a
/// genuine counterexample, since any least one would lie in the box too.
SurveyVerdict ftheta_right_lcm_survey(const ThetaTable& t, int max_x, int max_y);

std::string ftheta_text(const TwoGraphWord& z);

}  // namespace rlcm
