#include <gtest/gtest.h>

#include <random>

#include "rlcm/regular_rep.hpp"
#include "rlcm/registry.hpp"
#include "rlcm/self_similar.hpp"
#include "rlcm/star_calculus.hpp"
#include "support/mutants.hpp"
#include "support/oracles.hpp"

using namespace rlcm;

namespace {

Element word(std::initializer_list<int> letters) { return encode(FreeWord{letters}); }

Monomial vv(const Element& p, const Element& q) { return Monomial::VV(p, q); }

std::string word_text(const Element& e) {
  std::string out;
  for (auto c : e.code) out += static_cast<char>('0' + c);
  return out;
}

}  // namespace

TEST(Monomials, FreeMonoidProducts) {
  const auto s = free_monoid(2);
  EXPECT_EQ(mono_multiply(s, vv(word({0}), word({1})), vv(word({1}), word({0, 0}))), vv(word({0}), word({0, 0})));
  EXPECT_TRUE(mono_multiply(s, vv(word({0}), word({1})), vv(word({0}), word({}))).is_zero());
  EXPECT_TRUE(mono_multiply(s, Monomial::Zero(), vv(word({}), word({}))).is_zero());
}

TEST(Monomials, ProjectionsMeet) {
  const auto s = frac_semigroup();
  const auto e12 = token_monomial(s, {TokenKind::E, encode(FracPair{1, 2})});
  const auto e14 = token_monomial(s, {TokenKind::E, encode(FracPair{1, 4})});
  EXPECT_TRUE(mono_equal(s, mono_multiply(s, e12, e14), e14));
}

TEST(Monomials, Adjoint) {
  const auto p = word({0, 1});
  const auto q = word({1});
  EXPECT_EQ(mono_adjoint(vv(p, q)), vv(q, p));
  EXPECT_EQ(mono_adjoint(vv(p, p)), vv(p, p));
  EXPECT_TRUE(mono_adjoint(Monomial::Zero()).is_zero());
}

TEST(Monomials, EqualityUpToUnits) {
  const auto s = semigroup_for("zs:zxz");
  const auto d = *zs_for("zs:zxz");
  const auto p = zs_encode({encode(FracPair{1, 2}), encode(IntAffine{0, 1})});
  const auto w = zs_encode({d.U.identity, encode(IntAffine{1, 1})});
  ASSERT_TRUE(s.is_unit(w));
  EXPECT_TRUE(mono_equal(s, vv(p, s.identity), vv(s.multiply(p, w), w)));
  const auto f = free_monoid(2);
  EXPECT_FALSE(mono_equal(f, vv(word({0}), word({})), vv(word({1}), word({}))));
}

TEST(Words, Normalisation) {
  const auto s = free_monoid(2);
  EXPECT_EQ(word_normalize(s, {{TokenKind::VStar, word({0, 1})}, {TokenKind::V, word({0, 1})}}), vv(word({}), word({})));
  EXPECT_EQ(word_normalize(s, {{TokenKind::VStar, word({0})}, {TokenKind::V, word({0})}, {TokenKind::V, word({1})}}),
            vv(word({1}), word({})));
  auto ctx = word_context("nxn");
  const auto w = parse_word(ctx, "t(0,2)* t(1,2)");
  EXPECT_TRUE(word_normalize(ctx.semigroup, w).is_zero());
}

TEST(Words, ParserForms) {
  auto ctx = word_context("zs:odo:2");
  const auto w = parse_word(ctx, "v((01 ; g)) t(1)* s(g^2) e((0 ; e))");
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w[0].kind, TokenKind::V);
  EXPECT_EQ(w[1].kind, TokenKind::VStar);
  EXPECT_EQ(w[1].element, zs_encode({word({1}), Element{0}}));
  EXPECT_EQ(w[2].element, zs_encode({word({}), Element{2}}));
  EXPECT_EQ(w[3].kind, TokenKind::E);
  EXPECT_THROW(parse_word(ctx, "q(1)"), ParseError);
}

TEST(Foundation, FreeMonoidExamples) {
  const auto s = free_monoid(2);
  EXPECT_EQ(is_foundation_exact(s, {word({0}), word({1})}).status, FoundationStatus::Foundation);
  const auto bad = is_foundation_exact(s, {word({0}), word({1, 0})});
  EXPECT_EQ(bad.status, FoundationStatus::NotFoundation);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(*bad.witness, word({1, 1}));
  EXPECT_EQ(is_foundation_exact(s, {word({0}), word({1, 0}), word({1, 1})}).status, FoundationStatus::Foundation);
  EXPECT_THROW(is_foundation_exact(frac_semigroup(), {encode(FracPair{0, 1})}), ModeUnsupported);
}

TEST(Foundation, ExactMatchesBruteForceOnAllSmallSets) {
  const auto s = free_monoid(2);
  const auto words = enumerate_ball(s, 2).elements();
  ASSERT_EQ(words.size(), 7u);
  for (unsigned mask = 0; mask < (1u << words.size()); ++mask) {
    std::vector<Element> f;
    std::vector<std::string> texts;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (mask & (1u << i)) {
        f.push_back(words[i]);
        texts.push_back(word_text(words[i]));
      }
    }
    const bool exact = is_foundation_exact(s, f).status == FoundationStatus::Foundation;
    EXPECT_EQ(exact, fixtures::brute_free_foundation(2, texts)) << mask;
  }
}

TEST(Foundation, BoundedVerdicts) {
  const auto s = semigroup_for("nxn");
  std::vector<Element> cover;
  for (std::int64_t k = 0; k < 3; ++k) cover.push_back(encode(NatAffine{k, 3}));
  EXPECT_EQ(is_foundation_bounded(s, cover, enumerate_ball(s, 3)).status, FoundationStatus::Foundation);
  cover.pop_back();
  EXPECT_EQ(is_foundation_bounded(s, cover, enumerate_ball(s, 3)).status, FoundationStatus::NotFoundation);
}

TEST(Foundation, TransferClauses) {
  const auto d = zs_odometer(2);
  const auto a = foundation_transfer_a(d, Element{1}, 3);
  EXPECT_EQ(a.set, (std::vector<Element>{zs_encode({word({}), Element{1}})}));
  EXPECT_EQ(a.verdict.status, FoundationStatus::Foundation);
  const auto b = foundation_transfer_b(d, {word({0}), word({1})}, 3);
  EXPECT_EQ(b.set.size(), 2u);
  EXPECT_EQ(b.verdict.status, FoundationStatus::Foundation);
  const auto c = foundation_transfer_c(d, {zs_encode({word({0}), Element{1}}), zs_encode({word({1}), Element{0}})}, 3);
  EXPECT_EQ(c.set, (std::vector<Element>{word({0}), word({1})}));
  EXPECT_EQ(c.verdict.status, FoundationStatus::Foundation);
}

TEST(RegularRep, GeneratorTables) {
  const auto s = free_monoid(2);
  const auto ball = enumerate_ball(s, 2);
  const auto t = rep_generator(s, word({0}), ball);
  EXPECT_EQ(t.forward[*ball.index_of(word({}))], EvalOutcome::defined(*ball.index_of(word({0}))));
  EXPECT_EQ(t.forward[*ball.index_of(word({1}))], EvalOutcome::defined(*ball.index_of(word({0, 1}))));
  EXPECT_EQ(t.forward[*ball.index_of(word({1, 1}))], EvalOutcome::escaped());
  const auto adj = rep_adjoint(t);
  EXPECT_EQ(adj.forward[*ball.index_of(word({0, 1}))], EvalOutcome::defined(*ball.index_of(word({1}))));
  EXPECT_EQ(adj.forward[*ball.index_of(word({1}))], EvalOutcome::killed());

  const auto t1 = rep_generator(s, word({1}), ball);
  const std::vector<const std::vector<EvalOutcome>*> w{&adj.forward, &t1.forward};
  EXPECT_EQ(rep_compose(w, *ball.index_of(word({}))), EvalOutcome::killed());

  const auto n = nxn_semigroup();
  const auto nb = enumerate_ball(n, 3);
  const auto t02 = rep_generator(n, encode(NatAffine{0, 2}), nb);
  EXPECT_EQ(t02.forward[*nb.index_of(encode(NatAffine{1, 1}))], EvalOutcome::defined(*nb.index_of(encode(NatAffine{2, 2}))));
}

TEST(RegularRep, SuitesPassOnExamples) {
  for (const auto& sel : {"free:2", "frac", "nxn", "zs:nxn", "zs:odo:2", "zs:bs:1,2"}) {
    const auto s = semigroup_for(sel);
    const auto zs = zs_for(sel);
    const auto ball = enumerate_ball(s, 3);
    for (auto suite : {RelationSuite::Li, RelationSuite::Covariance}) {
      const auto r = verify_relations(s, ball, suite);
      EXPECT_TRUE(r.passed()) << r.suite;
      EXPECT_GT(r.compared, 0u);
    }
    if (zs) EXPECT_TRUE(verify_relations(s, ball, RelationSuite::K, &*zs).passed()) << sel;
  }
}

TEST(RegularRep, DisjointLcmMutantFailsCovariance) {
  const auto s = fixtures::disjoint_lcm_mutant(free_monoid(2));
  const auto r = verify_relations(s, enumerate_ball(s, 2), RelationSuite::Covariance);
  ASSERT_FALSE(r.passed());
  bool at_identity = false;
  for (const auto& v : r.violations) at_identity = at_identity || v.witness == "ε ε @ ε";
  EXPECT_TRUE(at_identity);
}

TEST(RegularRep, SwappedComplementsFailCovariance) {
  const auto s = fixtures::swapped_complement_mutant(frac_semigroup());
  EXPECT_FALSE(verify_relations(s, enumerate_ball(s, 2), RelationSuite::Covariance).passed());
}

TEST(RegularRep, OracleAgreesOnWords) {
  auto ctx = word_context("nxn");
  const auto s = ctx.semigroup;
  const auto ball = enumerate_ball(s, 3);
  EXPECT_TRUE(oracle_check_monomial(s, parse_word(ctx, "t(0,2)* t(1,2)"), ball).passed());
  const auto f = free_monoid(2);
  EXPECT_TRUE(oracle_check_monomial(f, {{TokenKind::VStar, word({0})}, {TokenKind::V, word({0})}}, enumerate_ball(f, 3)).passed());

  const auto bs = semigroup_for("bs:1,2");
  std::mt19937_64 rng(0);
  const auto r = oracle_check_words(bs, bs.generators, 4, enumerate_ball(bs, 3), 500, rng);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.compared, 0u);
}

TEST(RegularRep, OracleCatchesWrongLcm) {
  const auto s = fixtures::swapped_complement_mutant(frac_semigroup());
  std::mt19937_64 rng(0);
  EXPECT_FALSE(oracle_check_words(s, enumerate_ball(s, 1).elements(), 2, enumerate_ball(s, 2), 0, rng).passed());
}
