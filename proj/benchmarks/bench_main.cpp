// Microbenchmarks for the hot paths: lattice enumeration, orbit tables,
// counting formulas, CA enumeration, and monoid closure.

#include <benchmark/benchmark.h>

#include "ca/camonoid.hpp"
#include "ca/configs.hpp"
#include "ca/counting.hpp"
#include "ca/genset.hpp"
#include "ca/group.hpp"
#include "ca/ica.hpp"
#include "ca/lattice.hpp"

namespace {

using namespace ca;

void BM_SubgroupLattice(benchmark::State& state, const char* spec) {
  FiniteGroup G = build_group(spec);
  for (auto _ : state) {
    SubgroupLattice lat = enumerate_subgroups(G);
    benchmark::DoNotOptimize(lat.subgroups.size());
  }
}
BENCHMARK_CAPTURE(BM_SubgroupLattice, s3, "S3");
BENCHMARK_CAPTURE(BM_SubgroupLattice, d6, "D6");
BENCHMARK_CAPTURE(BM_SubgroupLattice, z2_pow4, "Z2xZ2xZ2xZ2");
BENCHMARK_CAPTURE(BM_SubgroupLattice, q8xz2, "Q8xZ2");

void BM_OrbitTable(benchmark::State& state, const char* spec, int q) {
  FiniteGroup G = build_group(spec);
  SubgroupLattice lat = enumerate_subgroups(G);
  for (auto _ : state) {
    OrbitTable ot = enumerate_orbits(G, lat, q);
    benchmark::DoNotOptimize(ot.orbit_count());
  }
}
BENCHMARK_CAPTURE(BM_OrbitTable, d4_q2, "D4", 2);
BENCHMARK_CAPTURE(BM_OrbitTable, z12_q2, "Z12", 2);
BENCHMARK_CAPTURE(BM_OrbitTable, s3_q3, "S3", 3);
BENCHMARK_CAPTURE(BM_OrbitTable, z12_q3, "Z12", 3);

void BM_AlphaMobius(benchmark::State& state, const char* spec, int q) {
  FiniteGroup G = build_group(spec);
  SubgroupLattice lat = enumerate_subgroups(G);
  for (auto _ : state) {
    AlphaVector alpha = alpha_mobius(lat, q);
    benchmark::DoNotOptimize(alpha.classes.size());
  }
}
BENCHMARK_CAPTURE(BM_AlphaMobius, d6_q2, "D6", 2);
BENCHMARK_CAPTURE(BM_AlphaMobius, q8xz2_q3, "Q8xZ2", 3);

void BM_AperiodicCount(benchmark::State& state, const char* spec, int q) {
  FiniteGroup G = build_group(spec);
  SubgroupLattice lat = enumerate_subgroups(G);
  for (auto _ : state) {
    ApCount c = ac_general(lat, q);
    benchmark::DoNotOptimize(c.value.get_mpz_t());
  }
}
BENCHMARK_CAPTURE(BM_AperiodicCount, d6_q2, "D6", 2);
BENCHMARK_CAPTURE(BM_AperiodicCount, z2_pow4_q5, "Z2xZ2xZ2xZ2", 5);

void BM_CaEnumeration(benchmark::State& state, const char* spec, int q) {
  FiniteGroup G = build_group(spec);
  CaSpace space = make_ca_space(G, q);
  for (auto _ : state) {
    CaEnumerator en(space);
    TransformationTable t;
    std::size_t count = 0;
    while (en.next(t)) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK_CAPTURE(BM_CaEnumeration, z3_q2, "Z3", 2);
BENCHMARK_CAPTURE(BM_CaEnumeration, z4_q2, "Z4", 2);

void BM_InvertibleScan(benchmark::State& state, const char* spec, int q) {
  FiniteGroup G = build_group(spec);
  CaSpace space = make_ca_space(G, q);
  for (auto _ : state) {
    std::vector<TransformationTable> units = invertible_ca(space);
    benchmark::DoNotOptimize(units.size());
  }
}
BENCHMARK_CAPTURE(BM_InvertibleScan, z4_q2, "Z4", 2);
BENCHMARK_CAPTURE(BM_InvertibleScan, z2_q3, "Z2", 3);

void BM_MonoidClosure(benchmark::State& state, const char* spec, int q) {
  FiniteGroup G = build_group(spec);
  SubgroupLattice lat = enumerate_subgroups(G);
  CaSpace space = make_ca_space(G, q);
  RelRankReport rel = relrank(G, lat, alpha_mobius(lat, q), q);
  std::vector<TransformationTable> seed = invertible_ca(space);
  for (const TransformationTable& t : generator_tables(space, rel))
    seed.push_back(t);
  for (auto _ : state) {
    std::vector<TransformationTable> monoid = closure(space, seed);
    benchmark::DoNotOptimize(monoid.size());
  }
}
BENCHMARK_CAPTURE(BM_MonoidClosure, z2_q2, "Z2", 2);
BENCHMARK_CAPTURE(BM_MonoidClosure, z3_q2, "Z3", 2);

}  // namespace

BENCHMARK_MAIN();
