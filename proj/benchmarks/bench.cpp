#include <benchmark/benchmark.h>

#include "qhent/builders.hpp"
#include "qhent/entropy.hpp"

using namespace qhent;

namespace {

std::shared_ptr<const DescriptorGroup> sum_n(std::uint64_t m) {
  return build_group(restricted_sum(cyclic(m), IndexSet::naturals));
}

FiniteSubgroup block(const std::shared_ptr<const DescriptorGroup>& g,
                     std::size_t k) {
  std::vector<ElementCode> gens;
  for (std::size_t i = 0; i < k; ++i)
    gens.push_back(g->encode(
        support_value({{static_cast<std::int64_t>(i), scalar_value(1)}})));
  return FiniteSubgroup::closure(g, gens);
}

void bm_closure(benchmark::State& state) {
  auto g = sum_n(6);
  for (auto _ : state)
    benchmark::DoNotOptimize(block(g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(bm_closure)->Arg(1)->Arg(2)->Arg(3);

void bm_trajectory_shift(benchmark::State& state) {
  auto g = sum_n(static_cast<std::uint64_t>(state.range(0)));
  auto sh = Endomorphism::shift(g, 1);
  auto F = block(g, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(trajectory(sh, F, {6, 3, std::size_t{1} << 20}));
}
BENCHMARK(bm_trajectory_shift)->Arg(2)->Arg(3)->Arg(6);

void bm_limit_free(benchmark::State& state) {
  auto g = sum_n(3);
  auto sh = Endomorphism::shift(g, 1);
  auto F = block(g, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(limit_free_entropy(sh, F));
}
BENCHMARK(bm_limit_free)->Arg(1)->Arg(2)->Arg(3);

void bm_quaternion_multiply(benchmark::State& state) {
  auto q8 = build_group(quaternion8());
  auto els = q8->elements();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        q8->multiply(els[i % 8], els[(i * 5 + 3) % 8]));
    ++i;
  }
}
BENCHMARK(bm_quaternion_multiply);

} // namespace

BENCHMARK_MAIN();
