#include <benchmark/benchmark.h>

#include <qtri/properties.hpp>
#include <qtri/transforms.hpp>
#include <qtri/triangles.hpp>

namespace
{

using namespace qtri;

void BM_DetExact(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = Rational(static_cast<long>((i * 7 + j * 13) % 11) - 5);
        }
        m(i, i) += Rational(1, static_cast<unsigned long>(i + 2));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(det_exact(m));
    }
}
BENCHMARK(BM_DetExact)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_TPr_Pascal(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const RatMatrix m = triangle_matrix(generate(preset("pascal"), n - 1), n - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_TP_r(m, 3));
    }
}
BENCHMARK(BM_TPr_Pascal)->Arg(6)->Arg(10)->Arg(14);

void BM_StrongQLogConvex(benchmark::State &state)
{
    const PolySeq rows = row_gen_fns(generate(preset("schroder_large"), static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_strongly_q_log_convex(rows));
    }
}
BENCHMARK(BM_StrongQLogConvex)->Arg(10)->Arg(20)->Arg(40);

void BM_GenPenta(benchmark::State &state)
{
    const PentaSchemes s{CoeffScheme::constant(1), CoeffScheme::constant(1), CoeffScheme::constant(1),
                         CoeffScheme::constant(1), CoeffScheme::constant(1)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen_penta(s, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_GenPenta)->Arg(25)->Arg(50)->Arg(100);

void BM_BisnomialTransform(benchmark::State &state)
{
    const auto n_max = static_cast<std::size_t>(state.range(0));
    const PolySeq f = row_gen_fns(generate(preset("motzkin"), 3 * n_max));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bisnomial_transform(f, 3, n_max));
    }
}
BENCHMARK(BM_BisnomialTransform)->Arg(5)->Arg(10);

} // namespace

// The packaged benchmark_main archive carries LTO bytecode from another compiler build.
BENCHMARK_MAIN();
