#include <benchmark/benchmark.h>

#include <random>

#include "consta/cdft.hpp"
#include "consta/codes.hpp"
#include "consta/oracle.hpp"

using namespace consta;

namespace {

Vec random_vec(const FieldCtx& f, std::size_t n) {
  static std::mt19937_64 gen(1);
  std::uniform_int_distribution<std::uint64_t> d(0, f.cardinality() - 1);
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f.make(d(gen)));
  return v;
}

// Largest proper divisor of x^n - lambda with at most n/2 degree, so products are nontrivial.
ConstaCode mid_code(const FieldCtx& f, std::size_t n, const FieldElem& lambda) {
  const RootBasis b = build_basis(CodeParams::make(f, n, lambda));
  const auto divs = monic_divisors(b);
  Poly best = divs.front();
  for (const auto& g : divs)
    if (static_cast<std::size_t>(g.degree()) * 2 <= n) best = g;
  return code_from_generator(b, best);
}

void BM_Forward(benchmark::State& state) {
  const FieldCtx f = build_field(3, {2});
  const auto n = static_cast<std::size_t>(state.range(0));
  const RootBasis b = build_basis(CodeParams::make(f, n, f.make(5)));
  const Vec a = random_vec(f, n);
  for (auto _ : state) benchmark::DoNotOptimize(forward(a, b));
}
BENCHMARK(BM_Forward)->Arg(8)->Arg(16)->Arg(40);

void BM_RoundTrip(benchmark::State& state) {
  const FieldCtx f = build_field(2, {1});
  const auto n = static_cast<std::size_t>(state.range(0));
  const RootBasis b = build_basis(CodeParams::make(f, n, f.one()));
  const Vec a = random_vec(f, n);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(forward(a, b)));
}
BENCHMARK(BM_RoundTrip)->Arg(7)->Arg(15)->Arg(31);

void BM_ProductSumset(benchmark::State& state) {
  const FieldCtx f = build_field(3, {1});
  const ConstaCode c = mid_code(f, static_cast<std::size_t>(state.range(0)), f.from_int(2));
  for (auto _ : state) benchmark::DoNotOptimize(schur_product_sumset(c, c));
}
BENCHMARK(BM_ProductSumset)->Arg(8)->Arg(16)->Arg(20);

void BM_ProductGcd(benchmark::State& state) {
  const FieldCtx f = build_field(3, {1});
  const ConstaCode c = mid_code(f, static_cast<std::size_t>(state.range(0)), f.from_int(2));
  for (auto _ : state) benchmark::DoNotOptimize(schur_product_gcd(c, c));
}
BENCHMARK(BM_ProductGcd)->Arg(8)->Arg(16)->Arg(20);

void BM_ProductOracle(benchmark::State& state) {
  const FieldCtx f = build_field(3, {1});
  const ConstaCode c = mid_code(f, static_cast<std::size_t>(state.range(0)), f.from_int(2));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_schur_product(c, c));
}
BENCHMARK(BM_ProductOracle)->Arg(8)->Arg(16)->Arg(20);

void BM_DimensionSequence(benchmark::State& state) {
  const FieldCtx f = build_field(2, {1});
  const RootBasis b = build_basis(CodeParams::make(f, 15, f.one()));
  const ConstaCode c = code_from_generator(b, monic_divisors(b)[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(dimension_sequence(c));
}
BENCHMARK(BM_DimensionSequence)->Arg(3)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
