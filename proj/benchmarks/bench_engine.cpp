#include "evanescent/bessel.hpp"
#include "evanescent/reflected_field.hpp"
#include "evanescent/sweep.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <string>

namespace ev = evanescent;

namespace {

const ev::DipoleConfig scenario{ev::coil_moment({10, 3e9, 0.1}), 1.0, 100.0};

ev::ResponseModel model_for(int index)
{
    switch (index) {
        case 0: return ev::ResponseModel::drude();
        case 1: return ev::ResponseModel::plasma();
        default: return ev::ResponseModel::ideal_metal();
    }
}

void BM_lateral_field(benchmark::State& state)
{
    const ev::ResponseModel model = model_for(static_cast<int>(state.range(0)));
    const double x = static_cast<double>(state.range(1)) / 4.0;
    for (auto _ : state) benchmark::DoNotOptimize(ev::h_x_reflected(x, 0.0, scenario, model));
    state.SetLabel(std::string(ev::to_string(model.tag)));
}
BENCHMARK(BM_lateral_field)->ArgsProduct({{0, 1, 2}, {1, 4, 10, 40}});

void BM_lateral_field_tolerance(benchmark::State& state)
{
    ev::QuadratureConfig cfg;
    cfg.rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ev::h_x_reflected(1.0, 0.0, scenario, ev::ResponseModel::drude(), cfg));
}
BENCHMARK(BM_lateral_field_tolerance)->DenseRange(4, 12, 2);

void BM_vertical_field(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(ev::h_z_reflected(1.0, 0.0, 1.0, scenario, ev::ResponseModel::drude()));
}
BENCHMARK(BM_vertical_field);

void BM_figure2_sweep(benchmark::State& state)
{
    const auto specs = ev::figure2_specs(scenario, ev::copper, 'a', ev::FieldUnit::mOe);
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        for (const auto& s : specs) benchmark::DoNotOptimize(ev::run_sweep(s, {}, threads));
}
BENCHMARK(BM_figure2_sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_bessel_j1(benchmark::State& state)
{
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev::bessel_j1(x));
        x = x < 100.0 ? x + 0.37 : 0.1;
    }
}
BENCHMARK(BM_bessel_j1);

}  // namespace

BENCHMARK_MAIN();
