#include <gtest/gtest.h>

#include "rlcm/boundary_affine.hpp"
#include "support/mutants.hpp"

using namespace rlcm;

namespace {

// Pointwise composition on a window, the reference for affine_compose.
void expect_pointwise(const AffinePI& f, const AffinePI& g) {
  const auto fg = affine_compose(f, g);
  for (std::int64_t n = -60; n <= 60; ++n) {
    const auto gn = g.apply(n);
    const auto want = gn ? f.apply(*gn) : std::nullopt;
    ASSERT_EQ(fg.apply(n), want) << f.text() << " o " << g.text() << " at " << n;
  }
}

std::vector<AffinePI> sample_maps() {
  std::vector<AffinePI> out{AffinePI::identity(), AffinePI::empty()};
  for (std::int64_t a : {-3, -2, -1, 1, 2, 3}) {
    for (std::int64_t b : {-2, 0, 1, 5}) {
      out.push_back(AffinePI::affine(a, b));
      out.push_back(AffinePI::affine(a, b, 1, 2));
    }
  }
  out.push_back(AffinePI::projection(2, 3));
  out.push_back(affine_adjoint(AffinePI::affine(2, 1)));
  out.push_back(affine_adjoint(AffinePI::affine(-3, 2, 1, 2)));
  return out;
}

}  // namespace

TEST(Affine, ApplyAndText) {
  const auto f = AffinePI::affine(2, 1, 1, 3);
  EXPECT_EQ(f.apply(4), 9);
  EXPECT_FALSE(f.apply(5));
  EXPECT_EQ(f.text(), "2*n+1 on 1(mod 3)");
  EXPECT_EQ(AffinePI::empty().text(), "empty");
  const auto half = affine_adjoint(AffinePI::affine(2, 0));
  EXPECT_EQ(half.apply(6), 3);
  EXPECT_FALSE(half.apply(7));
}

TEST(Affine, CompositionIsPointwise) {
  const auto maps = sample_maps();
  for (const auto& f : maps) {
    for (const auto& g : maps) expect_pointwise(f, g);
  }
}

TEST(Affine, AdjointInvertsOnRange) {
  for (const auto& f : sample_maps()) {
    const auto fa = affine_adjoint(f);
    for (std::int64_t n = -40; n <= 40; ++n) {
      if (const auto y = f.apply(n)) EXPECT_EQ(fa.apply(*y), n);
    }
    EXPECT_TRUE(affine_compose(fa, f).is_empty() || affine_compose(fa, f).is_projection());
  }
}

TEST(Affine, Powers) {
  const auto s = AffinePI::affine(1, 1);
  EXPECT_EQ(affine_power(s, 3), AffinePI::affine(1, 3));
  EXPECT_EQ(affine_power(s, -2), AffinePI::affine(1, -2));
  EXPECT_EQ(affine_power(s, 0), AffinePI::identity());
  EXPECT_EQ(affine_product({s, AffinePI::affine(2, 0)}), affine_compose(s, AffinePI::affine(2, 0)));
}

TEST(Partition, Verdicts) {
  EXPECT_EQ(partition_check({AffinePI::projection(0, 2), AffinePI::projection(1, 2)}).kind, PartitionKind::Partition);
  for (std::int64_t p : {2, 3, 5}) {
    std::vector<AffinePI> ps;
    for (std::int64_t k = 0; k < p; ++k) ps.push_back(AffinePI::projection(k, p));
    EXPECT_EQ(partition_check(ps).kind, PartitionKind::Partition);
  }
  const auto v = partition_check({AffinePI::projection(0, 2), AffinePI::projection(0, 3)});
  EXPECT_EQ(v.kind, PartitionKind::Neither);
  EXPECT_EQ(v.uncovered, 1);
  EXPECT_EQ(v.overlap, 0);
  EXPECT_EQ(partition_check({AffinePI::identity(), AffinePI::projection(0, 2)}).kind, PartitionKind::CoverOnly);
  EXPECT_EQ(partition_check({AffinePI::projection(0, 4), AffinePI::projection(1, 4)}).kind, PartitionKind::DisjointOnly);
}

TEST(Models, AllSuitesPass) {
  for (const auto& name : model_names()) {
    for (const auto& r : verify_boundary_suite(build_model(name))) {
      EXPECT_TRUE(r.passed()) << r.suite << " " << (r.passed() ? "" : r.violations[0].witness);
      EXPECT_GT(r.compared, 0u) << r.suite;
    }
  }
  for (const auto& r : verify_boundary_suite(build_model("BS1n:3"))) EXPECT_TRUE(r.passed()) << r.suite;
}

TEST(Models, UnknownNamesThrow) {
  EXPECT_THROW(build_model("Q3"), UnknownModel);
  EXPECT_THROW(build_model("BS1n(1)"), UnknownModel);
}

TEST(Models, MutatedGeneratorFailsAtZero) {
  const auto m = fixtures::shifted_generator_mutant(build_model("BS1n(3)"), 2);
  bool witness_at_zero = false;
  bool failed = false;
  for (const auto& r : verify_boundary_suite(m)) {
    for (const auto& v : r.violations) {
      failed = true;
      witness_at_zero = witness_at_zero || v.witness.ends_with("n=0");
    }
  }
  EXPECT_TRUE(failed);
  EXPECT_TRUE(witness_at_zero);
}

TEST(Models, GeneratorMapsHold) {
  for (const auto& r : verify_generator_maps()) {
    EXPECT_TRUE(r.passed()) << r.suite;
    EXPECT_GT(r.compared, 0u);
  }
}

TEST(Models, GeneratorsPointwise) {
  const auto qn = build_model("QN");
  for (std::int64_t n = -20; n <= 20; ++n) {
    EXPECT_EQ(qn.gen("s").apply(n), n + 1);
    EXPECT_EQ(qn.gen("v", 3).apply(n), 3 * n);
  }
  const auto bs = build_model("BS1n(3)");
  for (std::int64_t n = -20; n <= 20; ++n) EXPECT_EQ(bs.gen("t", 2).apply(n), 3 * n + 1);
}
