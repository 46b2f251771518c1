// Microbenchmarks for the hot paths of a scenario run: the spectral
// propagation step, the reduced-density-matrix diagonalization, the
// trajectory-ensemble integrator, and the phase-space binning.  Together
// these account for nearly all of a run's wall time.

#include <benchmark/benchmark.h>

#include "qcent/cdyn.hpp"
#include "qcent/centropy.hpp"
#include "qcent/grid.hpp"
#include "qcent/model.hpp"
#include "qcent/parallel.hpp"
#include "qcent/qdyn.hpp"
#include "qcent/rdm.hpp"
#include "qcent/states.hpp"

namespace {

using namespace qcent;

const ModelParams kChaotic{1.0, 1.0, 1.0, 0.01, 0.5};

Grid1D bench_grid(int n) { return make_grid(n, -22.0, 22.0, 1.0); }

ComplexField2D bench_field(const Grid1D& g) {
    GaussianSpec s;
    s.px0 = s.py0 = 3.87;  // sqrt(m E0) at E0 = 15
    return build_gaussian(s, g, g);
}

void BM_SplitStep(benchmark::State& state) {
    const Grid1D g = bench_grid(static_cast<int>(state.range(0)));
    WorkerPool pool(1);
    ComplexField2D f = bench_field(g);
    const PropagatorPlan plan(kChaotic, g, g, 0.002);
    for (auto _ : state) {
        plan.step(f, pool);
        benchmark::DoNotOptimize(f.data());
    }
    state.SetItemsProcessed(state.iterations() * g.n * g.n);
}
BENCHMARK(BM_SplitStep)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_ReducedDensity(benchmark::State& state) {
    const Grid1D g = bench_grid(static_cast<int>(state.range(0)));
    const ComplexField2D f = bench_field(g);
    for (auto _ : state) {
        const auto rdm = ReducedDensityMatrix::reduce_x(f);
        benchmark::DoNotOptimize(rdm.purity());
    }
}
BENCHMARK(BM_ReducedDensity)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_EnsembleStep(benchmark::State& state) {
    WorkerPool pool(1);
    GaussianSpec s;
    s.px0 = s.py0 = 3.87;
    const ClassicalDensitySpec d = classical_analog(s, kChaotic.hbar);
    TrajectoryEnsemble e = sample_ensemble(d, 4096, 1, pool);
    constexpr std::size_t kSteps = 64;
    for (auto _ : state)
        propagate_ensemble(kChaotic, e, kSteps, kSteps, 0.0005, pool);
    state.SetItemsProcessed(state.iterations() * e.size() * kSteps);
}
BENCHMARK(BM_EnsembleStep)->Unit(benchmark::kMillisecond);

void BM_BinSnapshot(benchmark::State& state) {
    const Grid1D g = bench_grid(256);
    WorkerPool pool(1);
    GaussianSpec s;
    s.px0 = s.py0 = 3.87;
    const ClassicalDensitySpec d = classical_analog(s, kChaotic.hbar);
    const TrajectoryEnsemble e = sample_ensemble(d, 100000, 1, pool);
    for (auto _ : state) {
        const PhaseSpaceHistogram h = bin_snapshot(e.x, e.px, g, pool);
        benchmark::DoNotOptimize(h.total());
    }
    state.SetItemsProcessed(state.iterations() * e.size());
}
BENCHMARK(BM_BinSnapshot)->Unit(benchmark::kMillisecond);

void BM_SampleEnsemble(benchmark::State& state) {
    WorkerPool pool(1);
    GaussianSpec s;
    s.px0 = s.py0 = 3.87;
    const ClassicalDensitySpec d = classical_analog(s, kChaotic.hbar);
    for (auto _ : state) {
        const TrajectoryEnsemble e = sample_ensemble(d, 100000, 1, pool);
        benchmark::DoNotOptimize(e.x.data());
    }
    state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_SampleEnsemble)->Unit(benchmark::kMillisecond);

void BM_ClassicalEntropies(benchmark::State& state) {
    const Grid1D g = bench_grid(256);
    WorkerPool pool(1);
    GaussianSpec s;
    s.px0 = s.py0 = 3.87;
    const ClassicalDensitySpec d = classical_analog(s, kChaotic.hbar);
    const TrajectoryEnsemble e = sample_ensemble(d, 100000, 1, pool);
    const PhaseSpaceHistogram h = bin_snapshot(e.x, e.px, g, pool);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classical_linear_entropy(h, 1.0));
        benchmark::DoNotOptimize(classical_von_neumann_entropy(h, 1.0));
    }
}
BENCHMARK(BM_ClassicalEntropies)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
