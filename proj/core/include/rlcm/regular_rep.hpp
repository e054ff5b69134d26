#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "rlcm/semigroup.hpp"
#include "rlcm/star_calculus.hpp"
#include "rlcm/zappa_szep.hpp"

namespace rlcm {

enum class OutcomeKind { Defined, Killed, Escaped };

/// Result of applying an operator word to a basis vector delta_q.
struct EvalOutcome {
  OutcomeKind kind = OutcomeKind::Defined;
  std::size_t index = 0;  // meaningful for Defined only

  static EvalOutcome defined(std::size_t i) { return {OutcomeKind::Defined, i}; }
  static EvalOutcome killed() { return {OutcomeKind::Killed, 0}; }
  static EvalOutcome escaped() { return {OutcomeKind::Escaped, 0}; }
  friend bool operator==(const EvalOutcome&, const EvalOutcome&) = default;
};

/// v_p on the truncated basis: forward[q] is delta_{pq}; adjoint[r] is
/// delta_{p^-1 r}, Killed when p does not left-divide r and Escaped when the
/// quotient lies outside the ball.
struct PartialInjectionTable {
  std::vector<EvalOutcome> forward;
  std::vector<EvalOutcome> adjoint;
};

PartialInjectionTable rep_generator(const SemigroupDescriptor& s, const Element& p, const Ball& ball);

/// The table of v_p^*, i.e. forward and adjoint swapped.
PartialInjectionTable rep_adjoint(const PartialInjectionTable& t);

/// Operator word A_1 A_2 ... A_k applied right to left; Escaped is sticky.
EvalOutcome rep_compose(const std::vector<const std::vector<EvalOutcome>*>& word, std::size_t basis_index);

/// VV{p, q} applied to delta_r directly: delta_{p q^-1 r}.
EvalOutcome mono_apply(const SemigroupDescriptor& s, const Monomial& m, const Ball& ball, std::size_t basis_index);

enum class RelationSuite { Li, Covariance, K };

/// Evaluates every relation instance with parameters in `ball` on every basis
/// vector of `ball`. Escaped vectors are counted in `skipped`. The K suite
/// needs the Zappa-Szep data and `s` must be zs_product(*zs).
CheckReport verify_relations(const SemigroupDescriptor& s, const Ball& ball, RelationSuite suite,
                             const ZSDescriptor* zs = nullptr);

/// Compares word_normalize(word) with the composed token tables, vector by
/// vector.
CheckReport oracle_check_monomial(const SemigroupDescriptor& s, const std::vector<Token>& word, const Ball& ball);

/// Differential test over words of length 1..max_len in the tokens v_p, v_p^*
/// for p in `tokens`: exhaustive when `samples` is 0, otherwise `samples`
/// words drawn with `rng`.
CheckReport oracle_check_words(const SemigroupDescriptor& s, const std::vector<Element>& tokens, int max_len,
                               const Ball& basis, std::size_t samples, std::mt19937_64& rng);

}  // namespace rlcm
