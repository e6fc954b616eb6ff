#include <benchmark/benchmark.h>

#include "denjoy/planar.hpp"
#include "denjoy/sampling.hpp"

using namespace denjoy;

namespace {

CantorParams params(int bits, int depth) {
  CantorParams p = CantorParams::defaults(bits);
  p.depth = depth;
  return p;
}

void BM_Construction(benchmark::State& state) {
  const CantorParams p = params(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(CantorApprox(p));
}
BENCHMARK(BM_Construction)->Args({128, 60})->Args({256, 128})->Args({448, 128})->Unit(benchmark::kMicrosecond);

void BM_Eval(benchmark::State& state) {
  // Depth scaled with precision so the model stays resolvable.
  const int bits = static_cast<int>(state.range(0));
  const DenjoyMap f(params(bits, bits / 2 - 8));
  const double eps = 4 * f.cantor().resolution().to_double();
  const auto ys = mixed_samples(f.cantor(), 1024, 1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(f.eval(ys[i++ % ys.size()], eps));
}
BENCHMARK(BM_Eval)->Arg(128)->Arg(256)->Arg(448);

void BM_CantorFunction(benchmark::State& state) {
  const CantorApprox c(CantorParams::defaults());
  const auto ys = mixed_samples(c, 1024, 2);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(c.cantor_function(ys[i++ % ys.size()], 1e-30));
}
BENCHMARK(BM_CantorFunction);

void BM_RotationNumber(benchmark::State& state) {
  const DenjoyMap f(CantorParams::defaults());
  const CirclePoint y = CirclePoint::from_decimal("0.3", f.bits());
  for (auto _ : state) benchmark::DoNotOptimize(f.rotation_number(y, state.range(0), 1e-30));
}
BENCHMARK(BM_RotationNumber)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_PlanarStep(benchmark::State& state) {
  const AdmissibleMap h{DenjoyMap(CantorParams::defaults())};
  const auto ys = mixed_samples(h.circle_map().cantor(), 1024, 3);
  const Fixed rho = Fixed::from_ratio(3, 4, h.bits());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(h.step({ys[i++ % ys.size()], rho}, 1e-30));
}
BENCHMARK(BM_PlanarStep);

}  // namespace

BENCHMARK_MAIN();
