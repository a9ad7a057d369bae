#include <benchmark/benchmark.h>

#include "stripless/klyachko.hpp"
#include "stripless/mondrian.hpp"
#include "stripless/schubert.hpp"

using namespace stripless;

static void BM_BergetFinkClass(benchmark::State& state) {
  GrassmannianContext ctx(static_cast<int>(state.range(0)),
                          static_cast<int>(state.range(1)));
  for (auto _ : state) {
    FormalCohomologyClass cls = berget_fink_class(ctx);
    benchmark::DoNotOptimize(cls.num_terms());
  }
}
BENCHMARK(BM_BergetFinkClass)->Args({2, 6})->Args({3, 7})->Args({3, 8});

static void BM_KlyachkoClass(benchmark::State& state) {
  GrassmannianContext ctx(static_cast<int>(state.range(0)),
                          static_cast<int>(state.range(1)));
  for (auto _ : state) {
    FormalCohomologyClass cls = klyachko_class(ctx);
    benchmark::DoNotOptimize(cls.num_terms());
  }
}
BENCHMARK(BM_KlyachkoClass)->Args({3, 7})->Args({4, 9});

static void BM_OneStripLessCount(benchmark::State& state) {
  GrassmannianContext ctx(4, 9);
  Partition shape{5, 4, 2, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_one_strip_less(shape, ctx));
  }
}
BENCHMARK(BM_OneStripLessCount);

static void BM_GapClassExplicit(benchmark::State& state) {
  GapVector g({1, 3, 5, 7});
  for (auto _ : state) {
    FormalCohomologyClass cls = m_class_explicit(g);
    benchmark::DoNotOptimize(cls.num_terms());
  }
}
BENCHMARK(BM_GapClassExplicit);

static void BM_SchubertProduct(benchmark::State& state) {
  GrassmannianContext ctx(4, 10);
  FormalCohomologyClass a = FormalCohomologyClass::schubert(ctx, Partition{4, 2, 1});
  FormalCohomologyClass b = FormalCohomologyClass::schubert(ctx, Partition{3, 2, 1});
  for (auto _ : state) {
    FormalCohomologyClass product = multiply(a, b);
    benchmark::DoNotOptimize(product.num_terms());
  }
}
BENCHMARK(BM_SchubertProduct);

BENCHMARK_MAIN();
