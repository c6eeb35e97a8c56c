#include <benchmark/benchmark.h>

#include <random>

#include <qdivisor/identities.hpp>
#include <qdivisor/macmahon.hpp>
#include <qdivisor/partitions.hpp>
#include <qdivisor/series.hpp>
#include <qdivisor/wz.hpp>

using namespace qdivisor;

namespace {

QSeries dense_series(int order, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 12);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (auto &x : c) {
        x = ratio(num(rng), den(rng));
    }
    return QSeries(std::move(c));
}

void BM_mul(benchmark::State &state)
{
    const int order = static_cast<int>(state.range(0));
    const QSeries a = dense_series(order, 1);
    const QSeries b = dense_series(order, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(a, b));
    }
}

void BM_mul_serial(benchmark::State &state)
{
    const int order = static_cast<int>(state.range(0));
    const QSeries a = dense_series(order, 1);
    const QSeries b = dense_series(order, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul_serial(a, b));
    }
}

void BM_u_direct(benchmark::State &state)
{
    const MacParams p{2, static_cast<int>(state.range(0)), 200};
    for (auto _ : state) {
        benchmark::DoNotOptimize(u_direct(p));
    }
}

void BM_u_direct_serial(benchmark::State &state)
{
    const MacParams p{2, static_cast<int>(state.range(0)), 200};
    for (auto _ : state) {
        benchmark::DoNotOptimize(u_direct_serial(p));
    }
}

void BM_u_product(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(u_product(2, static_cast<int>(state.range(0)), 200));
    }
}

void BM_difference_table(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(difference_table(static_cast<int>(state.range(0))));
    }
}

void BM_difference_table_serial(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(difference_table_serial(static_cast<int>(state.range(0))));
    }
}

void BM_wz1(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(wz1_check(3, static_cast<int>(state.range(0))));
    }
}

void BM_wz1_serial(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(wz1_check_serial(3, static_cast<int>(state.range(0))));
    }
}

void BM_check_all(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(identities::check_all(static_cast<int>(state.range(0))));
    }
}

void BM_check_all_serial(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(identities::check_all_serial(static_cast<int>(state.range(0))));
    }
}

} // namespace

BENCHMARK(BM_mul)->Arg(100)->Arg(300)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul_serial)->Arg(100)->Arg(300)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_u_direct)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_u_direct_serial)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_u_product)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_difference_table)->Arg(120)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_difference_table_serial)->Arg(120)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wz1)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wz1_serial)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_check_all)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_check_all_serial)->Arg(120)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
