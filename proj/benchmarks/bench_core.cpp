#include <benchmark/benchmark.h>

#include "dunkl/harness/samples.hpp"
#include "dunkl/kernel.hpp"

using namespace dunkl;

namespace {

DunklParams b2(unsigned n_max) {
  return DunklParams::make(builtin_preset("B", 2, 0, Mode::exact), {Scalar(1), Scalar::rational(1, 2)}, n_max);
}

DunklParams a2(unsigned n_max) {
  return DunklParams::make(builtin_preset("A", 3, 0, Mode::exact), {Scalar::rational(5, 2)}, n_max);
}

// Cold caches: fresh operators each iteration.
void BM_DunklApplyBasis(benchmark::State& state) {
  DunklParams params = b2(6);
  auto basis = basis_up_to(2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    DunklOperators ops(params);
    for (const auto& m : basis) benchmark::DoNotOptimize(ops.dunkl(0).apply(Polynomial::monomial(m, Scalar(1))));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(basis.size()));
}
BENCHMARK(BM_DunklApplyBasis)->Arg(4)->Arg(6)->Arg(8);

void BM_BuildVkB2(benchmark::State& state) {
  DunklParams params = b2(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_vk(params));
}
BENCHMARK(BM_BuildVkB2)->Arg(4)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_BuildVkA2(benchmark::State& state) {
  DunklParams params = a2(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_vk(params));
}
BENCHMARK(BM_BuildVkA2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_PairingDegree6(benchmark::State& state) {
  DunklParams params = b2(6);
  Polynomial p = Polynomial::parse("(x1 - 2*x2)^3 * (x1 + x2)^3", 2);
  Polynomial q = Polynomial::parse("x1^6 - 3*x1^2*x2^4 + x2^6", 2);
  for (auto _ : state) {
    DunklOperators ops(params);
    benchmark::DoNotOptimize(pairing(ops, p, q));
  }
}
BENCHMARK(BM_PairingDegree6)->Unit(benchmark::kMillisecond);

void BM_HeatIntertwinerApply(benchmark::State& state) {
  DunklParams params = b2(6);
  Polynomial p = Polynomial::parse("(x1^2 + x2^2 - 1)^3", 2);
  for (auto _ : state) {
    DunklOperators ops(params);
    Scalar half = Scalar::rational(1, 2);
    Polynomial f = exp_apply(ops.laplacian_squares(), half, p);
    benchmark::DoNotOptimize(exp_apply(ops.classical_laplacian(), -half, f));
  }
}
BENCHMARK(BM_HeatIntertwinerApply)->Unit(benchmark::kMillisecond);

void BM_KernelEvalRankOne(benchmark::State& state) {
  unsigned order = static_cast<unsigned>(state.range(0));
  KernelTruncation tr(build_vk(DunklParams::make(builtin_preset("Z2", 1, 0, Mode::exact), {Scalar(1)}, order)));
  Vector x{Scalar(1)};
  ComplexVector y = ComplexVector::imaginary({Scalar::rational(3, 2)});
  for (auto _ : state) benchmark::DoNotOptimize(kernel_eval(tr, x, y));
}
BENCHMARK(BM_KernelEvalRankOne)->Arg(10)->Arg(30)->Arg(60);

void BM_PositivityScanB2(benchmark::State& state) {
  IntertwinerTable t = build_vk(b2(6));
  auto family = harness::nonnegative_family(2, {}, 1);
  harness::DyadicGrid grid = harness::ball_grid(2);
  for (auto _ : state)
    for (const auto& m : family) benchmark::DoNotOptimize(harness::scan_grid(vk_apply(t, m.p), grid));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(family.size() * grid.size()));
}
BENCHMARK(BM_PositivityScanB2)->Unit(benchmark::kMillisecond);

}  // namespace
