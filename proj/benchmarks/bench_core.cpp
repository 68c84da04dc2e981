#include <benchmark/benchmark.h>

#include "lieidx/appendix.hpp"
#include "lieidx/case_file.hpp"
#include "lieidx/index_engine.hpp"
#include "lieidx/lie_algebra.hpp"
#include "lieidx/orbits.hpp"

namespace {

using namespace lieidx;

const LieAlgebraTable& e7() {
  static const LieAlgebraTable L = chevalley_algebra(CartanType::parse("E7"));
  return L;
}

const LieAlgebraTable& e8() {
  static const LieAlgebraTable L = chevalley_algebra(CartanType::parse("E8"));
  return L;
}

std::vector<SupportTerm> support(const LieAlgebraTable& L, std::initializer_list<const char*> labels) {
  std::vector<SupportTerm> out;
  for (const char* l : labels) out.push_back({*L.label_index(l), Rational(1)});
  return out;
}

void BM_ChevalleyE8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chevalley_algebra(CartanType::parse("E8")));
}
BENCHMARK(BM_ChevalleyE8)->Unit(benchmark::kMillisecond);

void BM_CentralizerE8(benchmark::State& state) {
  const auto& L = e8();
  const auto orbit = nilpotent_from_support(L, support(L, {"x54", "x61", "x77", "x97"}));
  for (auto _ : state) benchmark::DoNotOptimize(centralizer(L, orbit.representative));
}
BENCHMARK(BM_CentralizerE8)->Unit(benchmark::kMillisecond);

void BM_KirillovRankE8(benchmark::State& state) {
  const auto& L = e8();
  const auto orbit = nilpotent_from_support(L, support(L, {"x54", "x61", "x77", "x97"}));
  const auto s = subalgebra_structure(L, orbit.centralizer);
  const RatVector xi = sample_functional(1, 0, s.dim());
  for (auto _ : state) benchmark::DoNotOptimize(kirillov_rank(s, xi));
}
BENCHMARK(BM_KirillovRankE8)->Unit(benchmark::kMillisecond);

void BM_ClassicalSweepC4(benchmark::State& state) {
  const LieAlgebraTable L = algebra_for_type(CartanType::parse("C4"));
  const auto parts = enumerate_nilpotent_partitions('C', 8);
  for (auto _ : state) {
    std::size_t certified = 0;
    for (const auto& p : parts) certified += certify_elashvili(L, nilpotent_from_partition(L, p), 1).certified;
    benchmark::DoNotOptimize(certified);
  }
}
BENCHMARK(BM_ClassicalSweepC4)->Unit(benchmark::kMillisecond);

void BM_RigidCaseE7(benchmark::State& state) {
  const auto spec = load_case_file(std::string(LIEIDX_BENCH_CASE_DIR) + "/e7-41.case");
  const auto& L = e7();
  for (auto _ : state) benchmark::DoNotOptimize(verify_rigid_case(L, spec, 1));
}
BENCHMARK(BM_RigidCaseE7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
