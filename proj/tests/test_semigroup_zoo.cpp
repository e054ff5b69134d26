#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rlcm/registry.hpp"
#include "rlcm/zappa_szep.hpp"
#include "rlcm/zoo.hpp"
#include "support/mutants.hpp"
#include "support/oracles.hpp"

using namespace rlcm;

namespace {

Element free_word(std::initializer_list<int> letters) { return encode(FreeWord{letters}); }

}  // namespace

TEST(Ball, FreeMonoidRadiusTwoHasSevenWords) {
  const auto b = enumerate_ball(free_monoid(2), 2);
  EXPECT_EQ(b.size(), 7u);
  EXPECT_TRUE(b.contains(free_word({1, 0})));
  EXPECT_EQ(b.length_of(free_word({1, 1})), 2);
}

TEST(Ball, NaturalNumbersRadiusThree) {
  const auto b = enumerate_ball(nat_additive(), 3);
  std::set<std::int64_t> got;
  for (const auto& e : b) got.insert(e[0]);
  EXPECT_EQ(got, (std::set<std::int64_t>{0, 1, 2, 3}));
}

TEST(Ball, BaumslagSolitarRadiusTwo) { EXPECT_EQ(enumerate_ball(bs_semigroup({1, 2}), 2).size(), 7u); }

TEST(Ball, MonotoneInRadius) {
  for (const auto& sel : registered_selectors()) {
    const auto s = semigroup_for(sel);
    const auto small = enumerate_ball(s, 2);
    const auto big = enumerate_ball(s, 3);
    for (const auto& e : small) EXPECT_TRUE(big.contains(e)) << sel;
  }
}

TEST(LeftDivide, FreeMonoidPrefixes) {
  const auto s = free_monoid(2);
  EXPECT_EQ(s.left_divide(free_word({0, 1}), free_word({0, 1, 1, 0})), free_word({1, 0}));
  EXPECT_FALSE(s.left_divide(free_word({1}), free_word({0, 1})));
}

TEST(LeftDivide, NatAffine) {
  const auto s = nxn_semigroup();
  EXPECT_EQ(s.left_divide(encode(NatAffine{1, 2}), encode(NatAffine{3, 4})), encode(NatAffine{1, 2}));
}

TEST(BruteLcm, FreeMonoid) {
  const auto s = free_monoid(2);
  const auto ball = enumerate_ball(s, 4);
  const auto l = brute_right_lcm(s, free_word({0}), free_word({0, 1}), ball);
  ASSERT_TRUE(l);
  EXPECT_EQ(l->lcm, free_word({0, 1}));
  EXPECT_EQ(l->left_comp, free_word({1}));
  EXPECT_EQ(l->right_comp, free_word({}));
  EXPECT_FALSE(brute_right_lcm(s, free_word({0}), free_word({1}), ball));
}

TEST(BruteLcm, BoundaryCandidateIsNotCertified) {
  const auto s = free_monoid(2);
  const auto ball = enumerate_ball(s, 2);
  EXPECT_THROW(brute_right_lcm(s, free_word({0}), free_word({0, 0}), ball), BallTooSmall);
  EXPECT_EQ(search_right_lcm(s, free_word({0}), free_word({0, 0}), ball).status, SearchStatus::BallTooSmall);
}

TEST(BruteLcm, FractionPair) {
  const auto s = frac_semigroup();
  const auto l = brute_right_lcm(s, encode(FracPair{1, 2}), encode(FracPair{2, 3}), enumerate_ball(s, 4));
  ASSERT_TRUE(l);
  EXPECT_EQ(l->lcm, encode(FracPair{5, 6}));
  EXPECT_EQ(l->left_comp, encode(FracPair{2, 3}));
  EXPECT_EQ(l->right_comp, encode(FracPair{1, 2}));
}

TEST(Frac, ClosedFormExamples) {
  auto l = frac_right_lcm({1, 2}, {2, 3});
  ASSERT_TRUE(l);
  EXPECT_EQ(l->lcm, (FracPair{5, 6}));
  EXPECT_EQ(l->left_comp, (FracPair{2, 3}));
  EXPECT_EQ(l->right_comp, (FracPair{1, 2}));
  EXPECT_FALSE(frac_right_lcm({0, 2}, {1, 2}));
  l = frac_right_lcm({1, 2}, {1, 4});
  ASSERT_TRUE(l);
  EXPECT_EQ(l->lcm, (FracPair{1, 4}));
  EXPECT_EQ(l->left_comp, (FracPair{0, 2}));
  EXPECT_EQ(l->right_comp, (FracPair{0, 1}));
}

TEST(Frac, ClosedFormMatchesScan) {
  for (std::int64_t x = 1; x <= 10; ++x) {
    for (std::int64_t y = 1; y <= 10; ++y) {
      for (std::int64_t r = 0; r < x; ++r) {
        for (std::int64_t s = 0; s < y; ++s) {
          const auto got = frac_right_lcm({r, x}, {s, y});
          const auto want = fixtures::progression_lcm(r, x, s, y);
          ASSERT_EQ(got.has_value(), want.has_value()) << r << "," << x << " " << s << "," << y;
          if (!want) continue;
          EXPECT_EQ(got->lcm, (FracPair{want->l, want->modulus}));
          EXPECT_EQ(got->left_comp, (FracPair{want->left_comp.first, want->left_comp.second}));
          EXPECT_EQ(got->right_comp, (FracPair{want->right_comp.first, want->right_comp.second}));
        }
      }
    }
  }
}

TEST(NatAffine, ProductAndDecomposition) {
  EXPECT_EQ(nxn_multiply({1, 2}, {3, 4}), (NatAffine{7, 8}));
  EXPECT_EQ(nxn_multiply({0, 1}, {5, 3}), (NatAffine{5, 3}));
  EXPECT_EQ(nxn_multiply({2, 3}, {0, 1}), (NatAffine{2, 3}));
  EXPECT_EQ(nxn_decompose({7, 4}), std::make_pair(FracPair{3, 4}, NatAffine{1, 1}));
  EXPECT_EQ(nxn_decompose({0, 1}), std::make_pair(FracPair{0, 1}, NatAffine{0, 1}));
  EXPECT_EQ(nxn_decompose({5, 2}), std::make_pair(FracPair{1, 2}, NatAffine{2, 1}));
  for (std::int64_t a = 1; a <= 12; ++a) {
    for (std::int64_t m = 0; m <= 40; ++m) {
      const auto [u, t] = nxn_decompose({m, a});
      EXPECT_TRUE(0 <= u.r && u.r < u.x);
      EXPECT_EQ(t.a, 1);
      EXPECT_EQ(nxn_multiply({u.r, u.x}, t), (NatAffine{m, a}));
    }
  }
}

TEST(NatAffine, LcmMatchesScan) {
  for (std::int64_t a = 1; a <= 6; ++a) {
    for (std::int64_t b = 1; b <= 6; ++b) {
      for (std::int64_t m = 0; m <= 8; ++m) {
        for (std::int64_t n = 0; n <= 8; ++n) {
          const auto got = nxn_right_lcm({m, a}, {n, b});
          const auto want = fixtures::progression_lcm(m, a, n, b);
          ASSERT_EQ(got.has_value(), want.has_value());
          if (want) {
            EXPECT_EQ(got->lcm, (NatAffine{want->l, want->modulus}));
            EXPECT_EQ(nxn_multiply({m, a}, got->left_comp), got->lcm);
            EXPECT_EQ(nxn_multiply({n, b}, got->right_comp), got->lcm);
          }
        }
      }
    }
  }
}

TEST(IntAffine, ProductAndDecomposition) {
  EXPECT_EQ(zxz_multiply({1, -1}, {1, -1}), (IntAffine{0, 1}));
  EXPECT_EQ(zxz_multiply({0, 2}, {1, 3}), (IntAffine{2, 6}));
  EXPECT_EQ(zxz_decompose({-3, -2}), std::make_pair(FracPair{1, 2}, IntAffine{-2, -1}));
  for (std::int64_t a = -9; a <= 9; ++a) {
    if (a == 0) continue;
    for (std::int64_t m = -20; m <= 20; ++m) {
      const auto [u, t] = zxz_decompose({m, a});
      EXPECT_TRUE(0 <= u.r && u.r < u.x);
      EXPECT_EQ(std::abs(t.a), 1);
      EXPECT_EQ(zxz_multiply({u.r, u.x}, t), (IntAffine{m, a}));
    }
  }
}

TEST(BaumslagSolitar, SpecProducts) {
  const auto bs23 = bs_semigroup({2, 3});
  EXPECT_EQ(bs23.display(bs23.multiply(bs23.parse("b"), bs23.parse("a"))), "b*a");
  EXPECT_EQ(bs23.display(bs23.multiply(bs23.parse("a*b"), bs23.parse("b^2*a"))), "a*a*b^2");
  const auto bs12 = bs_semigroup({1, 2});
  EXPECT_EQ(bs12.display(bs12.multiply(bs12.parse("b"), bs12.parse("b*a"))), "a*b");
  EXPECT_EQ(decode_bs(bs23.parse("a*b^2*a")), (BSNormalForm{{0, 2}, 0}));
}

TEST(BaumslagSolitar, NormalFormsMatchAffineImage) {
  for (int d : {2, 3}) {
    const auto s = bs_semigroup({1, d});
    std::vector<std::string> words{""};
    for (int len = 1; len <= 8; ++len) {
      const auto n = words.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<int>(words[i].size()) != len - 1) continue;
        words.push_back(words[i] + "a");
        words.push_back(words[i] + "b");
      }
    }
    std::map<std::pair<int, std::int64_t>, Element> seen;
    for (const auto& w : words) {
      Element e = s.identity;
      for (char c : w) e = s.multiply(e, s.parse(std::string(1, c)));
      const auto key = fixtures::bs1_affine_image(d, w);
      auto [it, fresh] = seen.emplace(key, e);
      if (!fresh) EXPECT_EQ(it->second, e) << w;
    }
    // distinct images give distinct normal forms
    std::set<Element> forms;
    for (const auto& [k, e] : seen) forms.insert(e);
    EXPECT_EQ(forms.size(), seen.size());
  }
}

TEST(BaumslagSolitar, RewritingIsConfluent) {
  std::mt19937_64 rng(7);
  for (BSParams p : {BSParams{1, 2}, BSParams{2, 3}, BSParams{3, 2}}) {
    std::uniform_int_distribution<std::int64_t> block(0, 7);
    std::uniform_int_distribution<int> len(0, 6);
    for (int trial = 0; trial < 300; ++trial) {
      BSBlocks blocks(static_cast<std::size_t>(len(rng)) + 1);
      for (auto& e : blocks) e = block(rng);
      EXPECT_EQ(bs_normalize_random(p, blocks, rng), bs_normalize(p, blocks));
    }
  }
}

TEST(Certification, RegisteredSemigroupsPass) {
  for (const auto& sel : {"free:2", "nat", "nxn", "frac", "zxz", "bs:1,2", "bs:2,3"}) {
    const auto s = semigroup_for(sel);
    const auto r = check_cancellativity_and_lcm(s, enumerate_ball(s, 3));
    EXPECT_TRUE(r.passed()) << sel << " " << (r.passed() ? "" : r.violations[0].check + " " + r.violations[0].witness);
    EXPECT_GT(r.compared, 0u);
  }
}

TEST(Certification, LeftProjectionBreaksCancellativity) {
  // the mutant collapses its own ball to {e}, so use the genuine one
  const auto s = fixtures::left_projection_mutant(free_monoid(2));
  const auto r = check_cancellativity_and_lcm(s, enumerate_ball(free_monoid(2), 2));
  EXPECT_TRUE(r.has_failure("left-cancellativity"));
  EXPECT_TRUE(r.has_failure("identity"));
}

TEST(Certification, RightProjectionIsStillLeftCancellative) {
  // multiply := q satisfies p q = p r => q = r, so only the identity law fails
  auto s = free_monoid(2);
  s.multiply = [](const Element&, const Element& q) { return q; };
  s.right_lcm = nullptr;
  const auto r = check_cancellativity_and_lcm(s, enumerate_ball(free_monoid(2), 2));
  EXPECT_FALSE(r.has_failure("left-cancellativity"));
  EXPECT_TRUE(r.has_failure("identity"));
}

TEST(Certification, SwappedComplementsAreCaught) {
  const auto s = fixtures::swapped_complement_mutant(frac_semigroup());
  const auto r = check_cancellativity_and_lcm(s, enumerate_ball(s, 2));
  EXPECT_TRUE(r.has_failure("lcm-witness"));
}

TEST(Units, EqualUpToUnitsInSignedAffine) {
  const auto s = zxz_semigroup();
  const auto p = encode(IntAffine{3, 2});
  const auto w = encode(IntAffine{1, -1});
  EXPECT_TRUE(s.is_unit(w));
  EXPECT_TRUE(equal_up_to_units(s, p, s.multiply(p, w)));
  EXPECT_FALSE(equal_up_to_units(s, p, s.multiply(p, encode(IntAffine{0, 2}))));
}

TEST(Parse, SpecLiterals) {
  EXPECT_EQ(parse_element("frac", "(1,2)"), encode(FracPair{1, 2}));
  EXPECT_EQ(parse_element("free:2", "ε"), free_word({}));
  EXPECT_THROW(parse_element("frac", "(1,"), ParseError);
  EXPECT_THROW(parse_element("frac", ""), ParseError);
  EXPECT_THROW(semigroup_for("nope"), UnknownSelector);
}

TEST(Parse, ErrorCarriesPosition) {
  try {
    parse_element("frac", "(1;2)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Parse, RoundTripOnRadiusThree) {
  for (const auto& sel : registered_selectors()) {
    const auto s = semigroup_for(sel);
    for (const auto& e : enumerate_ball(s, 3)) ASSERT_EQ(s.parse(s.display(e)), e) << sel << " " << s.display(e);
  }
}
