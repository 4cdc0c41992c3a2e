#include <benchmark/benchmark.h>

#include "bdecat/cfk2cfd.hpp"
#include "bdecat/diagram.hpp"
#include "bdecat/grading.hpp"
#include "bdecat/strands.hpp"

using namespace bdecat;

static void BM_BasisSplit2(benchmark::State& state) {
  Pmc pmc = Pmc::split(2);
  for (auto _ : state) benchmark::DoNotOptimize(basis_of_AZ(pmc, 0).size());
}
BENCHMARK(BM_BasisSplit2);

static void BM_ProductsSplit2(benchmark::State& state) {
  Pmc pmc = Pmc::split(2);
  auto elems = basis_of_AZ(pmc, 0);
  for (auto _ : state) {
    size_t nonzero = 0;
    for (const auto& a : elems)
      for (const auto& b : elems) nonzero += !(a * b).is_zero();
    benchmark::DoNotOptimize(nonzero);
  }
}
BENCHMARK(BM_ProductsSplit2);

static void BM_MGradingSplit2(benchmark::State& state) {
  Pmc pmc = Pmc::split(2);
  auto elems = basis_of_AZ(pmc, 0);
  auto ref = default_refinement(pmc);
  for (auto _ : state) {
    int s = 0;
    for (const auto& a : elems) s += m_of(a, pmc, ref);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_MGradingSplit2);

static void BM_BuildCfdTrefoil(benchmark::State& state) {
  CFKComplex c = right_trefoil_cfk();
  for (auto _ : state) benchmark::DoNotOptimize(build_cfd(c).gens.size());
}
BENCHMARK(BM_BuildCfdTrefoil);

static void BM_DeterminantClass(benchmark::State& state) {
  BorderedDiagram d{Pmc::split(2), 4, 2, {}};
  int id = 0;
  for (int b = 1; b <= 4; ++b)
    for (int a = 1; a <= 4; ++a) d.points.push_back({true, a, b, (++id % 3) ? 1 : -1});
  for (int b = 1; b <= 4; ++b)
    for (int c = 1; c <= 2; ++c) d.points.push_back({false, c, b, (b + c) % 2 ? 1 : -1});
  for (auto _ : state) benchmark::DoNotOptimize(cfd_class_from_determinants(d).size());
}
BENCHMARK(BM_DeterminantClass);

BENCHMARK_MAIN();
