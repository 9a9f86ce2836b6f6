#include <benchmark/benchmark.h>

#include "quadforms/harness.hpp"
#include "quadforms/identities.hpp"
#include "quadforms/independence.hpp"
#include "quadforms/linalg.hpp"

#include <random>

namespace {

void BM_BuildIdentity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto inst = quadforms::build_identity(n);
    benchmark::DoNotOptimize(inst.lhs.term_count());
  }
}
BENCHMARK(BM_BuildIdentity)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_VerifyIdentity3(benchmark::State& state) {
  const auto inst = quadforms::build_identity(3);
  for (auto _ : state) benchmark::DoNotOptimize(quadforms::verify_identity(inst).holds);
}
BENCHMARK(BM_VerifyIdentity3)->Unit(benchmark::kMillisecond);

void BM_S1PairCriterion(benchmark::State& state) {
  quadforms::TrialConfig cfg;
  cfg.r = 5;
  cfg.m = 4;
  std::uint64_t i = 0;
  for (auto _ : state) {
    const auto sys = quadforms::gen_instance(cfg, i++ % 64);
    benchmark::DoNotOptimize(quadforms::s1_independent(sys).verdict);
  }
}
BENCHMARK(BM_S1PairCriterion);

void BM_S3ThreeThree(benchmark::State& state) {
  quadforms::TrialConfig cfg;
  cfg.r = 3;
  cfg.m = 3;
  cfg.k = 3;
  std::uint64_t i = 0;
  for (auto _ : state) {
    const auto sys = quadforms::gen_instance(cfg, i++ % 64);
    benchmark::DoNotOptimize(quadforms::sk_independent(sys, 3).rank);
  }
}
BENCHMARK(BM_S3ThreeThree)->Unit(benchmark::kMicrosecond);

void BM_RationalRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 g(42);
  std::uniform_int_distribution<long> d(-20, 20);
  quadforms::RationalMatrix m(n, n, quadforms::Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = quadforms::Rational(d(g));
  }
  for (auto _ : state) benchmark::DoNotOptimize(quadforms::rank(m));
}
BENCHMARK(BM_RationalRank)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
