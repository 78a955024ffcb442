#include <benchmark/benchmark.h>

#include "qbessel/bessel.hpp"
#include "qbessel/macdonald.hpp"
#include "qbessel/qcore.hpp"
#include "qbessel/verify.hpp"

namespace {

using qb::Complex;
using qb::QContext;

void BM_Suite(benchmark::State& state, qb::verify::ExecutionPolicy policy) {
  const auto ids = qb::verify::default_suite();
  const QContext base(0.5);
  std::size_t reports = 0;
  for (auto _ : state) {
    const auto r = qb::verify::run_identity_suite(ids, std::nullopt, base, policy);
    reports = r.size();
    benchmark::DoNotOptimize(r.data());
  }
  state.counters["reports"] = static_cast<double>(reports);
}
BENCHMARK_CAPTURE(BM_Suite, serial, qb::verify::ExecutionPolicy::Serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, parallel, qb::verify::ExecutionPolicy::Parallel)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_EqExp(benchmark::State& state) {
  const QContext c(static_cast<double>(state.range(0)) / 1000.0);
  const Complex z(0.7, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(qb::eq_exp(z, c));
}
BENCHMARK(BM_EqExp)->Arg(500)->Arg(900)->Arg(990);

void BM_I1(benchmark::State& state) {
  const QContext c(0.7);
  const Complex z(static_cast<double>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(qb::I1(0.3, z, c).value);
}
BENCHMARK(BM_I1)->Arg(1)->Arg(6);

void BM_KInteger(benchmark::State& state) {
  const QContext c(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(qb::K_integer(1, 2, Complex(1.0, 0.2), c));
}
BENCHMARK(BM_KInteger);

void BM_KClosed(benchmark::State& state) {
  const QContext c(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(qb::K2_closed(0.3, Complex(4.0, 0.5), c));
}
BENCHMARK(BM_KClosed);

}  // namespace

BENCHMARK_MAIN();
