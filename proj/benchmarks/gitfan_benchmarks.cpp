#include <benchmark/benchmark.h>

#include <random>

#include "gitfan/io.hpp"

using namespace gitfan;

namespace {

const io::ProblemSpec& spec(const char* name) {
  static const io::ProblemSpec cube = io::load_dataset("cube");
  static const io::ProblemSpec g25 = io::load_dataset("g25");
  return std::string_view(name) == "cube" ? cube : g25;
}

const FanContext& g25_context() {
  static const FanContext ctx = [] {
    const auto& s = spec("g25");
    const auto afaces = enumerate_afaces(s.ideal(), s.group);
    return make_context(s.q, s.group, minimal_full_dim(project_orbit_cones(afaces, s.q, s.group), s.k()));
  }();
  return ctx;
}

void BM_GroebnerG25(benchmark::State& state) {
  const auto& s = spec("g25");
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(s.generators, MonomialOrder::degrevlex(s.r())));
}
BENCHMARK(BM_GroebnerG25)->Unit(benchmark::kMillisecond);

void BM_AfacesG25(benchmark::State& state) {
  const auto& s = spec("g25");
  const auto method = static_cast<AfaceMethod>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_afaces(s.ideal(), s.group, {method, 1}));
}
BENCHMARK(BM_AfacesG25)
    ->Arg(static_cast<int>(AfaceMethod::Fast))
    ->Arg(static_cast<int>(AfaceMethod::Sat))
    ->Arg(static_cast<int>(AfaceMethod::Rabinowitsch))
    ->Unit(benchmark::kMillisecond);

void BM_DoubleDescription(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(5);
  std::vector<IntVector> ineqs;
  for (std::size_t i = 0; i < 4 * n; ++i) {
    IntVector v(n);
    for (auto& x : v) x = static_cast<long>(rng() % 9) - 2;
    ineqs.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    ineqs.push_back(e);
  }
  for (auto _ : state) benchmark::DoNotOptimize(double_description(n, ineqs, {}));
}
BENCHMARK(BM_DoubleDescription)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_GitconeAtG25(benchmark::State& state) {
  const auto& ctx = g25_context();
  const QVector w = {Rational(3), Rational(2), Rational(1), Rational(1), Rational(1)};
  for (auto _ : state) benchmark::DoNotOptimize(gitcone_at(ctx, w));
}
BENCHMARK(BM_GitconeAtG25)->Unit(benchmark::kMicrosecond);

void BM_TraverseG25(benchmark::State& state) {
  const auto& ctx = g25_context();
  TraversalOptions opts;
  opts.threads = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(state.range(0) ? traverse_symmetric(ctx, opts) : traverse_plain(ctx, opts));
  }
}
BENCHMARK(BM_TraverseG25)->Args({1, 1})->Args({0, 1})->Args({1, 2})->Unit(benchmark::kMillisecond);

void BM_MovingConeG25(benchmark::State& state) {
  const auto& s = spec("g25");
  for (auto _ : state) benchmark::DoNotOptimize(moving_cone(s.q).inequalities().size());
}
BENCHMARK(BM_MovingConeG25)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
