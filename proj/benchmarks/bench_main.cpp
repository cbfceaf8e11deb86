#include <benchmark/benchmark.h>

#include "weylref/bijmap.hpp"
#include "weylref/finsub.hpp"
#include "weylref/identities.hpp"

using namespace weylref;

namespace {

const char* kTypes[] = {"A3", "B3", "D4", "F4"};

void BM_Classify(benchmark::State& state) {
  auto rs = RootSystem::build(kTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subsystems(rs));
  state.SetLabel(rs.label());
}
BENCHMARK(BM_Classify)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_WeylGroup(benchmark::State& state) {
  auto rs = RootSystem::build(kTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_group(rs));
  state.SetLabel(rs.label());
}
BENCHMARK(BM_WeylGroup)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

// Forward map followed by both inverse routes on the fundamental datum scaled by K.
void BM_RoundTrip(benchmark::State& state) {
  auto rs = RootSystem::build("B3");
  std::vector<std::pair<int, std::int64_t>> pairs;
  for (int j = 0; j < rs.rank(); ++j) pairs.push_back({j, 0});
  pairs.push_back({rs.negate(rs.highest_root(0)), state.range(0)});
  auto p = validate_gf(rs, GFDatum::from_pairs(pairs));
  for (auto _ : state) {
    auto q = j_forward(rs, p);
    benchmark::DoNotOptimize(j_inverse_minimal(rs, q));
    benchmark::DoNotOptimize(j_inverse_alcove(rs, q));
  }
}
BENCHMARK(BM_RoundTrip)->Arg(1)->Arg(3)->Arg(6);

void BM_DescentStats(benchmark::State& state) {
  auto rs = RootSystem::build(kTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(descent_stats(rs, XKind::P));
  state.SetLabel(rs.label());
}
BENCHMARK(BM_DescentStats)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_VerifyIdentity(benchmark::State& state) {
  auto prof = descent_stats(RootSystem::build("F4"), XKind::P);
  for (auto _ : state) benchmark::DoNotOptimize(verify_identity(prof, 1, state.range(0)));
}
BENCHMARK(BM_VerifyIdentity)->Arg(10)->Arg(40);

}  // namespace
BENCHMARK_MAIN();
