// bench_qme.cpp — Microbenchmarks for the hot paths: generator assembly,
// propagation, spectra and Choi tests.

#include <benchmark/benchmark.h>

#include "qme/basis.hpp"
#include "qme/lyapunov.hpp"
#include "qme/positivity.hpp"
#include "qme/presets.hpp"
#include "qme/random.hpp"
#include "qme/superoperator.hpp"
#include "qme/trajectory.hpp"

namespace {

qme::GeneratorSpec random_spec(int d, bool nonnegative)
{
    qme::Rng rng(99);
    const auto basis = qme::traceless_hermitian_basis(d);
    const qme::Matrix mixer = qme::haar_unitary(static_cast<int>(basis.size()), rng);
    std::uniform_real_distribution<double> coupling(nonnegative ? 0.0 : -1.0, 1.0);
    std::vector<qme::Jump> jumps;
    for (int l = 0; l < d; ++l) {
        qme::Matrix jump = qme::Matrix::Zero(d, d);
        for (std::size_t k = 0; k < basis.size(); ++k)
            jump += mixer(static_cast<Eigen::Index>(k), l) * basis[k];
        jumps.push_back({jump, qme::CouplingSchedule::constant(coupling(rng))});
    }
    return qme::GeneratorSpec(d, qme::random_hermitian(d, rng), std::move(jumps));
}

void BM_BuildSuperoperator(benchmark::State& state)
{
    const auto spec = random_spec(static_cast<int>(state.range(0)), true);
    for (auto _ : state)
        benchmark::DoNotOptimize(qme::build_superoperator(spec, 0.0));
}
BENCHMARK(BM_BuildSuperoperator)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_PropagateAutonomous(benchmark::State& state)
{
    const auto spec = random_spec(static_cast<int>(state.range(0)), true);
    for (auto _ : state)
        benchmark::DoNotOptimize(qme::propagate(spec, 0.0, 5.0));
}
BENCHMARK(BM_PropagateAutonomous)->Arg(2)->Arg(4)->Arg(6);

void BM_PropagateDriven(benchmark::State& state)
{
    const auto spec = qme::preset_driven_sign_changing();
    for (auto _ : state)
        benchmark::DoNotOptimize(qme::propagate(spec, 0.0, 5.0));
}
BENCHMARK(BM_PropagateDriven);

void BM_SpectrumAutonomous(benchmark::State& state)
{
    const auto spec = random_spec(static_cast<int>(state.range(0)), false);
    for (auto _ : state)
        benchmark::DoNotOptimize(qme::spectrum_autonomous(spec));
}
BENCHMARK(BM_SpectrumAutonomous)->Arg(2)->Arg(4)->Arg(6);

void BM_SpectrumGram(benchmark::State& state)
{
    const auto spec = random_spec(3, false);
    for (auto _ : state)
        benchmark::DoNotOptimize(qme::spectrum_gram(spec, 50.0));
}
BENCHMARK(BM_SpectrumGram);

void BM_ChoiCpTest(benchmark::State& state)
{
    const auto f = qme::propagate(random_spec(static_cast<int>(state.range(0)), true),
                                  0.0, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(qme::cp_test(qme::choi_of(f)));
}
BENCHMARK(BM_ChoiCpTest)->Arg(2)->Arg(4)->Arg(6);

void BM_EvolveTrajectory(benchmark::State& state)
{
    const auto spec = random_spec(3, true);
    qme::Rng rng(5);
    const qme::Matrix rho0 = qme::random_density(3, rng);
    std::vector<double> times;
    for (int i = 0; i <= 20; ++i) times.push_back(0.1 * i);
    for (auto _ : state)
        benchmark::DoNotOptimize(qme::evolve_trajectory(spec, rho0, times));
}
BENCHMARK(BM_EvolveTrajectory);

} // namespace

BENCHMARK_MAIN();
