#include <benchmark/benchmark.h>

#include "orecode/codes.hpp"
#include "orecode/equiv.hpp"

using namespace orecode;

namespace {

SkewCode example_code() {
    FieldAutomorphism s(FiniteField::make(2, 6, std::vector<int>{1, 1, 0, 1, 1, 0, 1}), 1);
    return build_code(parse_poly(s, "x^10 + g^40*x^9 + g^39*x^8 + g^12*x^6 + g^46*x^5 + g^42*x^4 + g^60*x^2 + g^7*x + g^54"),
                      parse_poly(s, "x^4 + g^52*x^3 + g^46*x^2 + g^23*x + g^33"));
}

// arg 0: 0 Hamming, 1 rank; arg 1: log2 of the word budget
void run(benchmark::State& st, bool parallel) {
    static const SkewCode code = example_code();
    SubfieldEmbedding E(code.ctx.field, 1);
    Metric m = st.range(0) ? Metric::rank(E) : Metric::hamming();
    DistanceOptions o;
    o.budget = std::uint64_t(1) << st.range(1);
    for (auto _ : st) {
        auto r = parallel ? min_distance(code, m, o) : min_distance_serial(code, m, o);
        benchmark::DoNotOptimize(r.minimum);
    }
    st.SetItemsProcessed(std::int64_t(st.iterations()) * std::int64_t(o.budget));
}

void BM_MinDistanceSerial(benchmark::State& st) { run(st, false); }
void BM_MinDistanceOpenMP(benchmark::State& st) { run(st, true); }

void BM_MultiplicativeExhaustive(benchmark::State& st) {
    FieldAutomorphism a(FiniteField::make(2, 2), 1);
    TrinomialShape s{int(st.range(0)), 1, 1, 1};
    auto f = shape_poly(a, s);
    for (auto _ : st) benchmark::DoNotOptimize(multiplicative_exhaustive(a, 1, f, f));
}

}  // namespace

BENCHMARK(BM_MinDistanceSerial)->Args({0, 20})->Args({1, 20})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinDistanceOpenMP)->Args({0, 20})->Args({1, 20})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplicativeExhaustive)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
