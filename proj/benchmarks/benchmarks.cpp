#include <helixforge/discretize.hpp>
#include <helixforge/gcode.hpp>
#include <helixforge/toolpath.hpp>
#include <helixforge/verify.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace helixforge;

const HelixSpec k_job{10.0, 0.0, 0.0, 10.0, 2.0, 6.0, 0.1};

void BM_discretize_count(benchmark::State& state) {
    const double delta = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(discretize_count({10.0, delta}));
    }
}
BENCHMARK(BM_discretize_count)->Arg(10)->Arg(1000)->Arg(100000);

void BM_helix_points(benchmark::State& state) {
    HelixSpec job = k_job;
    job.tolerance = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(helix_points(job));
    }
    job.bore_length = 6.0;
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(helix_points(job).size()));
}
BENCHMARK(BM_helix_points)->Arg(10)->Arg(1000)->Arg(100000);

void BM_elliptical_helix_points(benchmark::State& state) {
    const EllipticalHelixSpec spec{0.0, 0.0, 0.0, 10.0, 6.0, 2.0, 6.0,
                                   1.0 / static_cast<double>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(elliptical_helix_points(spec));
    }
}
BENCHMARK(BM_elliptical_helix_points)->Arg(10)->Arg(1000);

void BM_measure_deviation(benchmark::State& state) {
    const auto points = helix_points(k_job);
    const HelixCurve curve{0.0, 0.0, 5.0, 2.0};
    const int samples = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_deviation(points, curve, samples));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(points.size() - 1) * (samples + 1));
}
BENCHMARK(BM_measure_deviation)->Arg(16)->Arg(64)->Arg(256);

void BM_render_program(benchmark::State& state) {
    HelixSpec job = k_job;
    job.tolerance = 1.0 / static_cast<double>(state.range(0));
    const auto points = helix_points(job);
    for (auto _ : state) {
        const GCodeProgram program = render_program(points, job);
        benchmark::DoNotOptimize(program.render_text());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(points.size()));
}
BENCHMARK(BM_render_program)->Arg(10)->Arg(1000);

void BM_format_axis_value(benchmark::State& state) {
    double value = -1234.56789;
    for (auto _ : state) {
        benchmark::DoNotOptimize(format_axis_value(value, 3));
        value += 0.37;
    }
}
BENCHMARK(BM_format_axis_value);

void BM_oracle_min_count(benchmark::State& state) {
    const double delta = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_min_count(10.0, delta));
    }
}
BENCHMARK(BM_oracle_min_count)->Arg(10)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
