// Serial reference kernels against their OpenMP versions.
//
//   ./bench_kernels --benchmark_filter=jacobi
//
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "nroots/kernels.hpp"
#include "nroots/lab.hpp"
#include "nroots/linalg.hpp"
#include "nroots/random.hpp"

namespace {

using nroots::ComplexMatrix;
using nroots::kernels::Complex;
namespace kn = nroots::kernels;

std::vector<Complex> flat(const ComplexMatrix& m) { return {m.data().begin(), m.data().end()}; }

ComplexMatrix gaussian(std::size_t dim, std::uint64_t seed) {
    nroots::Rng rng(seed);
    return nroots::random_matrix(dim, rng);
}

ComplexMatrix hermitian(std::size_t dim, std::uint64_t seed) {
    nroots::Rng rng(seed);
    return nroots::random_hermitian(dim, rng);
}

template <auto Matmul>
void BM_matmul(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto a = flat(gaussian(dim, 1));
    const auto b = flat(gaussian(dim, 2));
    std::vector<Complex> out(dim * dim);
    for (auto _ : state) {
        Matmul(a, b, out, dim);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dim * dim * dim));
}

// The copy of H is included in the timing; it is O(n^2) against the O(n^3) sweep.
template <auto Sweep>
void BM_jacobi_sweep(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const bool vectors = state.range(1) != 0;
    const auto h0 = flat(hermitian(dim, 3));
    const auto identity = flat(ComplexMatrix::identity(dim));
    std::vector<Complex> h, v;
    for (auto _ : state) {
        h = h0;
        if (vectors) {
            v = identity;
        }
        Sweep(h, v, dim, 0.0);
        benchmark::DoNotOptimize(h.data());
    }
}

template <auto Solve>
void BM_solve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a0 = flat(gaussian(n, 4));
    std::vector<Complex> b0(n, Complex(1.0, 0.0));
    std::vector<Complex> a, b;
    for (auto _ : state) {
        a = a0;
        b = b0;
        benchmark::DoNotOptimize(Solve(a, b, n));
    }
}

void BM_hermitian_eigen(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto kernel = state.range(1) == 0 ? nroots::Kernel::serial : nroots::Kernel::parallel;
    const ComplexMatrix h = hermitian(dim, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(nroots::hermitian_eigen(h, {}, kernel));
    }
    state.SetLabel(kernel == nroots::Kernel::serial ? "serial" : "parallel");
}

void BM_volterra_norm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(nroots::lab::volterra_report(n));
    }
}

}  // namespace

BENCHMARK(BM_matmul<kn::serial::matmul>)->Name("matmul/serial")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_matmul<kn::parallel::matmul>)->Name("matmul/parallel")->RangeMultiplier(2)->Range(32, 256)->UseRealTime();

BENCHMARK(BM_jacobi_sweep<kn::serial::jacobi_sweep>)
    ->Name("jacobi_sweep/serial")
    ->ArgsProduct({{32, 64, 128, 256}, {0, 1}});
BENCHMARK(BM_jacobi_sweep<kn::parallel::jacobi_sweep>)
    ->Name("jacobi_sweep/parallel")
    ->ArgsProduct({{32, 64, 128, 256}, {0, 1}})
    ->UseRealTime();

BENCHMARK(BM_solve<kn::serial::solve_in_place>)->Name("solve/serial")->RangeMultiplier(2)->Range(64, 1024);
BENCHMARK(BM_solve<kn::parallel::solve_in_place>)->Name("solve/parallel")->RangeMultiplier(2)->Range(64, 1024)->UseRealTime();

BENCHMARK(BM_hermitian_eigen)->ArgsProduct({{32, 128}, {0, 1}})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_volterra_norm)->Arg(128)->Arg(256)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
