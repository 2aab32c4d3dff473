#include <benchmark/benchmark.h>

#include <random>

#include "gentuple/abelian_reduce.hpp"
#include "gentuple/certify.hpp"
#include "gentuple/explorer.hpp"
#include "gentuple/standard_groups.hpp"

using namespace gentuple;

namespace {

Tuple tuple_of(const Group& g, std::vector<GroupElement> entries) {
  Tuple t;
  t.group = g;
  t.entries = std::move(entries);
  return t;
}

void BM_heisenberg_mul(benchmark::State& state) {
  Group h = make_heisenberg(2);
  GroupElement a = h.canonicalize({Int(3), -2, 5, 1, -7});
  GroupElement b = h.canonicalize({Int(-1), 4, 0, 2, 9});
  for (auto _ : state) {
    a = h.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_heisenberg_mul);

void BM_collection_mul(benchmark::State& state) {
  Group f = make_free_nilpotent(3);
  GroupElement a = f.canonicalize({Int(3), -2, 5, 1, -7});
  GroupElement b = f.canonicalize({Int(-1), 4, 0, 2, 9});
  for (auto _ : state) {
    a = f.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_collection_mul);

void BM_smith_normal_form(benchmark::State& state) {
  std::mt19937_64 gen(42);
  std::uniform_int_distribution<long long> entry(-50, 50);
  IntMatrix m(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) m.at(r, c) = entry(gen);
  for (auto _ : state) {
    auto s = smith_normal_form(m);
    benchmark::DoNotOptimize(s.d);
  }
}
BENCHMARK(BM_smith_normal_form);

void BM_components_mod5(benchmark::State& state) {
  Group g = make_modular_heisenberg(1, 5);
  GraphQuery q{g, 2, GraphMode::ac, {}};
  ExplorerOptions opts;
  opts.workers = (int)state.range(0);
  for (auto _ : state) {
    auto r = components(q, opts);
    benchmark::DoNotOptimize(r.component_count);
  }
}
BENCHMARK(BM_components_mod5)->Arg(1)->Arg(4);

void BM_heisenberg_canonicalize(benchmark::State& state) {
  Group h = make_heisenberg(1);
  Tuple t = tuple_of(h, {h.canonicalize({Int(3), 5, -4}), h.canonicalize({Int(2), 3, 7})});
  for (auto _ : state) {
    auto c = heisenberg_canonicalize(h, t);
    benchmark::DoNotOptimize(c.moves().size());
  }
}
BENCHMARK(BM_heisenberg_canonicalize);

}  // namespace

BENCHMARK_MAIN();
