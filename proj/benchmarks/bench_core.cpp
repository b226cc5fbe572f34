#include <benchmark/benchmark.h>

#include <cmath>

#include "workbench/bergman.hpp"
#include "workbench/bloch.hpp"
#include "workbench/colombeau.hpp"
#include "workbench/gelfand.hpp"
#include "workbench/group_library.hpp"
#include "workbench/hardy.hpp"
#include "workbench/liefields.hpp"
#include "workbench/random.hpp"

using namespace workbench;

static void BM_DiscQuadrature(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(numcore::build_disc_quadrature(0.0, static_cast<int>(s.range(0)), 256));
}
BENCHMARK(BM_DiscQuadrature)->Arg(32)->Arg(64);

static void BM_ToeplitzMatrix(benchmark::State& s) {
    const auto q = numcore::build_disc_quadrature(0.0, 64, 256);
    const auto phi = numcore::sample(q, [](cplx z) { return z + std::conj(z) * z; });
    for (auto _ : s) benchmark::DoNotOptimize(bergman::toeplitz_matrix(phi, q, static_cast<int>(s.range(0))));
}
BENCHMARK(BM_ToeplitzMatrix)->Arg(8)->Arg(16)->Arg(32);

static void BM_BlochSeminorm(benchmark::State& s) {
    const numcore::HoloPoly f{1.0, 0.5, -0.25, 0.125, 2.0};
    for (auto _ : s) benchmark::DoNotOptimize(bloch::bloch_seminorm(f, 1.0));
}
BENCHMARK(BM_BlochSeminorm);

static void BM_HardyToeplitz(benchmark::State& s) {
    const int n = static_cast<int>(s.range(0));
    const auto c = numcore::boundary_fourier(numcore::BoundaryGrid::sample([](cplx x) { return x + 1.0 / x; }, 1024));
    for (auto _ : s) benchmark::DoNotOptimize(hardy::hardy_toeplitz(c, n));
}
BENCHMARK(BM_HardyToeplitz)->Arg(16)->Arg(64);

static void BM_GelfandS4(benchmark::State& s) {
    const auto g = gelfand::symmetric_group_4();
    const gelfand::SubgroupK k(g, {0, 1});
    for (auto _ : s) benchmark::DoNotOptimize(gelfand::is_gelfand_pair(g, k));
}
BENCHMARK(BM_GelfandS4);

static void BM_LieBracket(benchmark::State& s) {
    Rng rng(1);
    const auto x = liefields::random_field(rng, 3, static_cast<int>(s.range(0)));
    const auto y = liefields::random_field(rng, 3, static_cast<int>(s.range(0)));
    for (auto _ : s) benchmark::DoNotOptimize(liefields::lie_bracket(x, y));
}
BENCHMARK(BM_LieBracket)->Arg(2)->Arg(4);

static void BM_TaylorDefect(benchmark::State& s) {
    const auto m = colombeau::build_exact_order_mollifier(2);
    const auto ladder = colombeau::epsilon_ladder(12);
    for (auto _ : s) benchmark::DoNotOptimize(colombeau::taylor_defect([](double t) { return std::exp(t); }, m, ladder));
}
BENCHMARK(BM_TaylorDefect);
BENCHMARK_MAIN();
