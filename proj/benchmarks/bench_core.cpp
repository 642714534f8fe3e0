#include <benchmark/benchmark.h>

#include "dsg/bounds.hpp"
#include "dsg/generator.hpp"
#include "dsg/roots.hpp"
#include "dsg/solver.hpp"
#include "dsg/threshold.hpp"

namespace {

using dsg::Int;
using dsg::Rational;

void BM_strategy_iteration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  dsg::game::Game g = dsg::game::random_game(n, 600, 3, 42);
  dsg::game::PositionalStrategy s0 = dsg::game::least_index_strategy(g, 1);
  Rational lambda(9, 10);
  for (auto _ : state) {
    auto r = dsg::solve::strategy_iteration(g, lambda, s0);
    benchmark::DoNotOptimize(r.values);
  }
}
BENCHMARK(BM_strategy_iteration)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_strategy_iteration_near_one(benchmark::State& state) {
  dsg::game::Game g = dsg::game::random_game(8, 600, 3, 42);
  dsg::game::PositionalStrategy s0 = dsg::game::least_index_strategy(g, 1);
  Rational lambda = dsg::thresh::lambda_zero_for(g);
  for (auto _ : state) {
    auto r = dsg::solve::strategy_iteration(g, lambda, s0);
    benchmark::DoNotOptimize(r.values);
  }
}
BENCHMARK(BM_strategy_iteration_near_one);

void BM_brute_force(benchmark::State& state) {
  dsg::game::Game g = dsg::game::random_game(5, 700, 3, 7);
  Rational lambda(1, 2);
  for (auto _ : state) {
    auto r = dsg::solve::brute_force_values(g, lambda);
    benchmark::DoNotOptimize(r.maxmin);
  }
}
BENCHMARK(BM_brute_force);

void BM_isolate_roots(benchmark::State& state) {
  dsg::poly::Polynomial p =
      dsg::poly::Polynomial::from_ints({-3, 1, 4, -1, -5, 2, 1});
  for (auto _ : state) {
    auto ivs = dsg::poly::isolate_real_roots(p);
    benchmark::DoNotOptimize(ivs);
  }
}
BENCHMARK(BM_isolate_roots);

void BM_seed_order(benchmark::State& state) {
  const unsigned long m = static_cast<unsigned long>(state.range(0));
  dsg::poly::Polynomial p = dsg::poly::constructive_seed(m);
  for (auto _ : state) {
    int k = dsg::poly::root_order_at_one(p);
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_seed_order)->Arg(64)->Arg(512)->Arg(4096);

void BM_verify_F(benchmark::State& state) {
  const unsigned long n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    auto c = dsg::poly::verify_F_property(n, 2);
    benchmark::DoNotOptimize(c.holds);
  }
}
BENCHMARK(BM_verify_F)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
