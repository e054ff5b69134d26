#include <gtest/gtest.h>

#include "rlcm/registry.hpp"
#include "rlcm/self_similar.hpp"
#include "rlcm/zappa_szep.hpp"
#include "support/mutants.hpp"
#include "support/oracles.hpp"

using namespace rlcm;

namespace {

Element word(std::initializer_list<int> letters) { return encode(FreeWord{letters}); }
Element g(std::int64_t k) { return Element{k}; }

}  // namespace

TEST(ZappaSzep, OdometerProducts) {
  const auto d = zs_odometer(2);
  EXPECT_EQ(zs_multiply(d, {word({1}), g(1)}, {word({0}), g(0)}), (ZSElement{word({1, 1}), g(0)}));
  const ZSElement e{word({}), g(0)};
  const ZSElement p{word({0, 1}), g(3)};
  EXPECT_EQ(zs_multiply(d, e, p), p);
}

TEST(ZappaSzep, NatAffineProductMatchesDirectProduct) {
  const auto d = zs_nxn();
  // A = {(m, 1)} is encoded by m alone
  const auto got = zs_multiply(d, {encode(FracPair{1, 2}), Element{1}}, {encode(FracPair{0, 2}), Element{0}});
  EXPECT_EQ(got, (ZSElement{encode(FracPair{3, 4}), Element{0}}));
  for (std::int64_t a = 1; a <= 6; ++a) {
    for (std::int64_t m = 0; m <= 10; ++m) {
      for (std::int64_t b = 1; b <= 6; ++b) {
        for (std::int64_t n = 0; n <= 10; ++n) {
          const auto zs = zs_multiply(d, nxn_to_zs({m, a}), nxn_to_zs({n, b}));
          ASSERT_EQ(zs_to_nxn(zs), nxn_multiply({m, a}, {n, b}));
        }
      }
    }
  }
}

TEST(ZappaSzep, SpecialLcms) {
  const auto d = zs_odometer(2);
  // lcm((e, gamma), (0, e)) = (0, gamma) with complements (1, e) and (e, gamma)
  const auto l = zs_right_lcm(d, {word({}), g(1)}, {word({0}), g(0)});
  ASSERT_TRUE(l);
  EXPECT_EQ(l->lcm, (ZSElement{word({0}), g(1)}));
  EXPECT_EQ(zs_multiply(d, {word({}), g(1)}, l->left_comp), l->lcm);
  EXPECT_EQ(zs_multiply(d, {word({0}), g(0)}, l->right_comp), l->lcm);
  EXPECT_EQ(l->left_comp, (ZSElement{word({1}), g(0)}));

  // (u, e), (v, e) with comparable u, v: lcm is (longer, e)
  const auto m = zs_right_lcm(d, {word({0}), g(0)}, {word({0, 1}), g(0)});
  ASSERT_TRUE(m);
  EXPECT_EQ(m->lcm, (ZSElement{word({0, 1}), g(0)}));
  EXPECT_FALSE(zs_right_lcm(d, {word({0}), g(5)}, {word({1}), g(2)}));
}

TEST(ZappaSzep, DisjointExactlyWhenUPartsAre) {
  for (const auto& sel : zs_example_selectors()) {
    const auto d = *zs_for(sel);
    const auto s = zs_product(d);
    const auto ball = enumerate_ball(s, 2);
    for (const auto& p : ball) {
      for (const auto& q : ball) {
        const auto zp = zs_decode(p);
        const auto zq = zs_decode(q);
        EXPECT_EQ(zs_right_lcm(d, zp, zq).has_value(), d.U.right_lcm(zp.u, zq.u).has_value()) << sel;
      }
    }
  }
}

TEST(ZappaSzep, ExamplesSatisfyAxioms) {
  for (const auto& sel : zs_example_selectors()) {
    const auto d = *zs_for(sel);
    const auto r = zs_axiom_check(d, enumerate_ball(d.U, 3), enumerate_ball(d.A, 3));
    EXPECT_TRUE(r.passed()) << sel << " " << (r.passed() ? "" : r.violations[0].check + " " + r.violations[0].witness);
  }
  const auto odo = zs_odometer(2);
  EXPECT_TRUE(zs_axiom_check(odo, enumerate_ball(odo.U, 4), enumerate_ball(odo.A, 4)).passed());
}

TEST(ZappaSzep, EachMutationIsCaught) {
  for (const std::string target : {"B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "injective", "section"}) {
    const auto d = fixtures::odometer_mutant(2, target);
    const auto r = zs_axiom_check(d, enumerate_ball(d.U, 3), enumerate_ball(d.A, 3));
    EXPECT_TRUE(r.has_failure(target)) << target;
  }
}

TEST(ZappaSzep, ForgottenCarryWitness) {
  const auto d = fixtures::odometer_mutant(2, "B5");
  const auto r = zs_axiom_check(d, enumerate_ball(d.U, 3), enumerate_ball(d.A, 3));
  bool found = false;
  for (const auto& v : r.violations) found = found || (v.check == "B5" && v.witness == "g 1 0");
  EXPECT_TRUE(found);
}

TEST(ZappaSzep, IncomparableRestrictionsRaise) {
  // A = free monoid on two letters has incomparable ideals 0A and 1A
  ZSDescriptor d;
  d.name = "bad";
  d.U = free_monoid(2);
  d.A = free_monoid(2);
  d.action = [](const Element&, const Element& u) { return u; };
  d.action_inverse = d.action;
  d.restriction = [](const Element& a, const Element&) { return a; };
  EXPECT_THROW(zs_right_lcm(d, {word({}), word({0})}, {word({}), word({1})}), HypothesisViolation);
}

TEST(ZappaSzep, ConversionsRoundTrip) {
  for (std::int64_t a = -6; a <= 6; ++a) {
    if (a == 0) continue;
    for (std::int64_t m = -10; m <= 10; ++m) EXPECT_EQ(zs_to_zxz(zxz_to_zs({m, a})), (IntAffine{m, a}));
  }
  const auto bs = bs_semigroup({2, 3});
  for (const auto& e : enumerate_ball(bs, 4)) EXPECT_EQ(encode(zs_to_bs(bs_to_zs(decode_bs(e)))), e);
}

TEST(SelfSimilar, OdometerMatchesClosedForm) {
  for (int n : {2, 3}) {
    const auto m = adding_machine(n);
    const auto ball = enumerate_ball(free_monoid(n), 4);
    for (std::int64_t k = -9; k <= 9; ++k) {
      for (const auto& e : ball) {
        const auto w = decode_free(e);
        const auto [img, res] = ssa_act_word(m, k, w);
        const auto [want, carry] = fixtures::odometer_closed_form(n, k, w.letters);
        ASSERT_EQ(img.letters, want) << "n=" << n << " k=" << k;
        ASSERT_EQ(res, carry);
      }
    }
  }
}

TEST(SelfSimilar, OdometerExamples) {
  const auto m = adding_machine(2);
  EXPECT_EQ(ssa_act_word(m, 1, {{1, 1}}), std::make_pair(FreeWord{{0, 0}}, std::int64_t{1}));
  EXPECT_EQ(ssa_act_word(m, 1, {{0, 1}}), std::make_pair(FreeWord{{1, 1}}, std::int64_t{0}));
  EXPECT_EQ(ssa_act_word(m, 0, {{0, 1, 1}}), std::make_pair(FreeWord{{0, 1, 1}}, std::int64_t{0}));
}

TEST(SelfSimilar, ActionIsLengthPreservingBijection) {
  const auto m = adding_machine(3);
  for (std::size_t len = 1; len <= 3; ++len) {
    std::set<std::vector<int>> images;
    std::size_t total = 0;
    for (const auto& e : enumerate_ball(free_monoid(3), static_cast<int>(len))) {
      const auto w = decode_free(e);
      if (w.letters.size() != len) continue;
      const auto img = ssa_act_word(m, 4, w).first;
      EXPECT_EQ(img.letters.size(), len);
      images.insert(img.letters);
      ++total;
    }
    EXPECT_EQ(images.size(), total);
  }
}

TEST(TwoGraph, ThetaTables) {
  const auto t23 = theta_build(2, 3);
  EXPECT_TRUE(t23.is_bijection());
  EXPECT_EQ(t23.at(1, 1), std::make_pair(0, 2));
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 4}, {4, 6}}) {
    const auto t = theta_build(m, n);
    EXPECT_EQ(t.at(0, 0), std::make_pair(0, 0));
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < m; ++i) EXPECT_EQ(t.at(j, i).first + t.at(j, i).second * m, j + i * n);
    }
  }
  const auto t22 = theta_build(2, 2);
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i) EXPECT_EQ(t22.at(j, i), std::make_pair(j, i));
  }
}

TEST(TwoGraph, Products) {
  const auto s23 = ftheta_semigroup(theta_build(2, 3));
  EXPECT_EQ(s23.display(s23.multiply(s23.parse("y1"), s23.parse("x1"))), "x0.y2");
  EXPECT_EQ(s23.display(s23.multiply(s23.identity, s23.parse("x1.y2"))), "x1.y2");
  // theta(y_j, x_i) = (x_j, y_i) for (2, 2): y0 x0 -> x0 y0, then y0 x1 -> x0 y1
  const auto s22 = ftheta_semigroup(theta_build(2, 2));
  EXPECT_EQ(s22.display(s22.multiply(s22.parse("y0"), s22.parse("x0x1"))), "x0x0.y1");
}

TEST(TwoGraph, RandomRewritingAgrees) {
  std::mt19937_64 rng(11);
  for (auto [m, n] : {std::pair{2, 3}, {3, 4}, {2, 2}}) {
    const auto t = theta_build(m, n);
    std::uniform_int_distribution<int> len(0, 8);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<TwoGraphLetter> w(static_cast<std::size_t>(len(rng)));
      for (auto& l : w) {
        l.is_y = rng() % 2 == 1;
        l.index = static_cast<int>(rng() % static_cast<unsigned>(l.is_y ? n : m));
      }
      EXPECT_EQ(ftheta_normalize_random(t, w, rng), ftheta_normalize(t, w));
    }
  }
}

TEST(TwoGraph, EmbeddingIsMultiplicative) {
  for (auto [m, n] : {std::pair{2, 3}, {3, 4}}) {
    const auto t = theta_build(m, n);
    const auto s = ftheta_semigroup(t);
    const auto ball = enumerate_ball(s, 2);
    for (const auto& p : ball) {
      for (const auto& q : ball) {
        const auto zp = decode_ftheta(p);
        const auto zq = decode_ftheta(q);
        EXPECT_EQ(ftheta_embed(t, ftheta_multiply(t, zp, zq)),
                  frac_multiply(ftheta_embed(t, zp), ftheta_embed(t, zq)));
      }
    }
  }
}

TEST(TwoGraph, CompatibilityHoldsForAddingMachines) {
  for (auto [m, n] : {std::pair{2, 3}, {3, 4}}) {
    EXPECT_TRUE(prop_compat_check(theta_build(m, n), adding_machine(m), adding_machine(n), -5, 5).passed());
  }
  EXPECT_TRUE(prop_compat_check(theta_build(2, 3), adding_machine(2), adding_machine(3), 0, 0).passed());
}

TEST(TwoGraph, SwappedTableIsDetected) {
  const auto t = fixtures::theta_swap(theta_build(2, 3), 0, 0, 1, 1);
  EXPECT_TRUE(t.is_bijection());
  EXPECT_FALSE(prop_compat_check(t, adding_machine(2), adding_machine(3), -5, 5).passed());
}

TEST(TwoGraph, SurveyVerdicts) {
  EXPECT_TRUE(ftheta_right_lcm_survey(theta_build(2, 3), 2, 2).right_lcm());
  const auto v = ftheta_right_lcm_survey(theta_build(2, 2), 1, 1);
  ASSERT_FALSE(v.right_lcm());
  bool found = false;
  for (const auto& c : v.counterexamples) {
    std::set<std::string> mins;
    for (const auto& z : c.minimal) mins.insert(ftheta_text(z));
    const std::set<std::string> pair{ftheta_text(c.p), ftheta_text(c.q)};
    if (pair == std::set<std::string>{"x0", "y0"} && mins == std::set<std::string>{"x0.y0", "x0.y1"}) found = true;
  }
  EXPECT_TRUE(found);
}
