#include <benchmark/benchmark.h>

#include <random>

#include "rlcm/boundary_affine.hpp"
#include "rlcm/regular_rep.hpp"
#include "rlcm/registry.hpp"
#include "rlcm/self_similar.hpp"
#include "rlcm/zappa_szep.hpp"
#include "rlcm/zoo.hpp"

using namespace rlcm;

static void BM_FracRightLcm(benchmark::State& state) {
  std::int64_t acc = 0;
  for (auto _ : state) {
    for (std::int64_t x = 1; x <= 12; ++x) {
      for (std::int64_t y = 1; y <= 12; ++y) {
        if (auto l = frac_right_lcm({x - 1, x}, {y / 2, y})) acc += l->lcm.r;
      }
    }
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_FracRightLcm);

static void BM_BsMultiply(benchmark::State& state) {
  const auto s = bs_semigroup({2, 3});
  const auto ball = enumerate_ball(s, 4);
  for (auto _ : state) {
    for (const auto& p : ball) benchmark::DoNotOptimize(s.multiply(p, ball[ball.size() - 1]));
  }
}
BENCHMARK(BM_BsMultiply);

static void BM_EnumerateBall(benchmark::State& state) {
  const auto s = semigroup_for("zs:zxz");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(s, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_EnumerateBall)->DenseRange(2, 4);

static void BM_ZsRightLcm(benchmark::State& state) {
  const auto s = semigroup_for(state.range(0) == 0 ? "zs:zxz" : "zs:ftheta:2,3");
  const auto ball = enumerate_ball(s, 2);
  for (auto _ : state) {
    for (const auto& p : ball) {
      for (const auto& q : ball) benchmark::DoNotOptimize(s.right_lcm(p, q));
    }
  }
}
BENCHMARK(BM_ZsRightLcm)->Arg(0)->Arg(1);

static void BM_AxiomCheck(benchmark::State& state) {
  const auto d = zs_odometer(3);
  const auto bu = enumerate_ball(d.U, 3);
  const auto ba = enumerate_ball(d.A, 3);
  for (auto _ : state) benchmark::DoNotOptimize(zs_axiom_check(d, bu, ba).compared);
}
BENCHMARK(BM_AxiomCheck);

static void BM_CovarianceSuite(benchmark::State& state) {
  const auto s = semigroup_for("zs:nxn");
  const auto ball = enumerate_ball(s, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(s, ball, RelationSuite::Covariance).compared);
}
BENCHMARK(BM_CovarianceSuite)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_OracleWords(benchmark::State& state) {
  const auto s = semigroup_for("zs:bs:1,2");
  const auto tokens = enumerate_ball(s, 2).elements();
  const auto basis = enumerate_ball(s, 3);
  for (auto _ : state) {
    std::mt19937_64 rng(0);
    benchmark::DoNotOptimize(oracle_check_words(s, tokens, 4, basis, 1000, rng).compared);
  }
}
BENCHMARK(BM_OracleWords)->Unit(benchmark::kMillisecond);

static void BM_BoundarySuites(benchmark::State& state) {
  std::vector<BoundaryModel> models;
  for (const auto& n : model_names()) models.push_back(build_model(n));
  for (auto _ : state) {
    for (const auto& m : models) benchmark::DoNotOptimize(verify_boundary_suite(m).size());
  }
}
BENCHMARK(BM_BoundarySuites)->Unit(benchmark::kMillisecond);

static void BM_Survey(benchmark::State& state) {
  const auto t = theta_build(4, 6);
  for (auto _ : state) benchmark::DoNotOptimize(ftheta_right_lcm_survey(t, 2, 2).counterexamples.size());
}
BENCHMARK(BM_Survey)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
